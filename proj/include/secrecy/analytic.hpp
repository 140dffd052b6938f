#pragma once

#include <optional>

namespace secrecy {

// (mean, variance) of the Gaussian capacity approximation, in nats.
struct GaussianApprox {
  double mean = 0.0;
  double variance = 0.0;
};

enum class Regime { HighSnr, LowSnr, LargeScale };
enum class Csi { Main, Full };

const char* regime_name(Regime r);

// A closed-form ergodic secrecy sum-rate value together with the multiuser
// gain contributed by selection (zero for random scheduling).
struct EssrPrediction {
  double value = 0.0;  // nats, always >= 0
  double gain = 0.0;   // nats, selection gain over random scheduling
  Regime regime = Regime::HighSnr;
};

// High-SNR Gaussian approximation of log det(I + rho H^H H) for an
// rx_antennas x streams i.i.d. complex Gaussian H. Symmetric in its two
// shape arguments except for the log-rho coefficient min(rx, streams).
GaussianApprox capacity_gaussian(int rx_antennas, int streams, double rho);

// Random k-user scheduling, high SNR: rectified-Gaussian mean of the rate
// difference between base station and eavesdropper.
EssrPrediction essr_random_high(int bs, int eve, int served, double rho);

// Case-split simplifications of essr_random_high.
struct RandomHighCorollaries {
  bool rho_independent = false;          // bs > eve and served <= eve
  std::optional<double> mean_dominated;  // bs > eve, served > eve: value ~ mean gap
  std::optional<double> peak_value;      // bs == eve: peak over k, attained at k = bs
  std::optional<double> upper_bound;     // bs < eve: Gaussian-tail upper bound
};

RandomHighCorollaries essr_random_high_corollaries(int bs, int eve, int served, double rho);

// Random k-user scheduling, low SNR. Antenna counts may be fractional so the
// estimation-error variants can reuse the same arithmetic.
EssrPrediction essr_random_low(double bs, double eve, double served, double rho);

// Random scheduling with very large antenna arrays (channel hardening).
EssrPrediction essr_random_large(int bs, int eve, int served, double rho);

// Greedy k-user selection, high SNR, for either CSI assumption.
EssrPrediction essr_greedy_high(int bs, int eve, int served, int total_users, Csi csi);

// Strongest-user-only scheduling, high SNR (leading-order form).
EssrPrediction essr_tdma_high(int bs, int eve, int total_users, Csi csi);

// Greedy k-user selection, low SNR. `value` uses the closed-form mean rate.
EssrPrediction essr_greedy_low(int bs, int eve, int served, int total_users, double rho,
                               Csi csi);

// Mean per-served-user base-station trace rate under greedy low-SNR
// selection: closed form, and the equivalent order-statistic average. The
// two must agree to rounding.
double greedy_low_mean_rate(int bs, int eve, int served, int total_users, Csi csi);
double greedy_low_mean_rate_by_order_stats(int bs, int eve, int served, int total_users,
                                           Csi csi);

// Strongest-user-only scheduling, low SNR (leading-order form).
EssrPrediction essr_tdma_low(int bs, int eve, int total_users, double rho, Csi csi);

// Greedy selection with very large antenna arrays.
EssrPrediction essr_greedy_large(int bs, int eve, int served, int total_users, double rho,
                                 Csi csi);

// Secrecy rate of the l-th selected user under greedy main-CSI selection.
// HighSnr: worst-case lower bound against an interference-cancelling
// eavesdropper. LowSnr: value per unit linear SNR (multiply by rho).
double per_user_secrecy_rate(int bs, int eve, int rank, int total_users, Regime regime);

// Low-SNR random scheduling under estimation errors (lower bound).
EssrPrediction essr_error_random_low(double bs, double eve, double served, double rho,
                                     double xi);

// Low-SNR greedy main-CSI selection under estimation errors (lower bound,
// full expression).
EssrPrediction essr_error_greedy_low(int bs, int eve, int served, int total_users, double rho,
                                     double xi);

// Strongest-user-only scheduling under estimation errors (leading order).
EssrPrediction essr_error_tdma(int bs, int eve, int total_users, double rho, double xi);

}  // namespace secrecy
