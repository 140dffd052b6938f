#include "secrecy/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "secrecy/special_math.hpp"

namespace secrecy {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::HighSnr: return "high-snr";
    case Regime::LowSnr: return "low-snr";
    case Regime::LargeScale: return "large-scale";
  }
  return "unknown";
}

namespace {

double positive_part(double x) { return x > 0.0 ? x : 0.0; }

void require_counts(int bs, int eve, int served) {
  if (bs < 1 || eve < 1) throw std::domain_error("analytic: antenna counts must be >= 1");
  if (served < 1) throw std::domain_error("analytic: served user count must be >= 1");
}

// Mean uplift of the step-l greedy maximum over the remaining pool, in units
// of the parent standard deviation. Equals the asymptotic l-th order mean of
// a standard normal population of size (total - l + 1).
double step_gain_factor(int total_users, int step) {
  return rth_order_mean(static_cast<double>(total_users - step + 1), step, 0.0, 1.0);
}

}  // namespace

GaussianApprox capacity_gaussian(int rx_antennas, int streams, double rho) {
  if (rx_antennas < 1 || streams < 1)
    throw std::domain_error("capacity_gaussian: dimensions must be >= 1");
  if (!(rho > 0.0)) throw std::domain_error("capacity_gaussian: rho must be > 0");
  const int large = std::max(rx_antennas, streams);
  const int small = std::min(rx_antennas, streams);
  GaussianApprox out;
  out.mean = small * std::log(rho);
  for (int i = 1; i <= small; ++i) out.mean += digamma(large - i + 1);
  out.variance = static_cast<double>(small) / large;
  for (int i = 1; i <= small - 1; ++i) {
    const double denom = static_cast<double>(large - small + i);
    out.variance += i / (denom * denom);
  }
  return out;
}

EssrPrediction essr_random_high(int bs, int eve, int served, double rho) {
  require_counts(bs, eve, served);
  const GaussianApprox b = capacity_gaussian(bs, served, rho);
  const GaussianApprox e = capacity_gaussian(eve, served, rho);
  EssrPrediction out;
  out.regime = Regime::HighSnr;
  out.value = rectified_gaussian_mean(b.mean - e.mean, std::sqrt(b.variance + e.variance));
  return out;
}

RandomHighCorollaries essr_random_high_corollaries(int bs, int eve, int served, double rho) {
  require_counts(bs, eve, served);
  RandomHighCorollaries out;
  if (bs > eve) {
    out.rho_independent = served <= eve;
    if (served > eve) {
      const GaussianApprox b = capacity_gaussian(bs, served, rho);
      const GaussianApprox e = capacity_gaussian(eve, served, rho);
      out.mean_dominated = b.mean - e.mean;
    }
  } else if (bs == eve) {
    if (bs >= 2)
      out.peak_value =
          std::sqrt((std::log(static_cast<double>(bs - 1)) + kEulerGamma + 1.0) / M_PI);
  } else {
    const GaussianApprox b = capacity_gaussian(bs, served, rho);
    const GaussianApprox e = capacity_gaussian(eve, served, rho);
    const double mu = b.mean - e.mean;
    const double sigma = std::sqrt(b.variance + e.variance);
    out.upper_bound = sigma / std::sqrt(2.0 * M_PI) * std::exp(-mu * mu / (2.0 * sigma * sigma));
  }
  return out;
}

EssrPrediction essr_random_low(double bs, double eve, double served, double rho) {
  if (!(bs > 0.0) || !(eve > 0.0) || !(served >= 1.0))
    throw std::domain_error("essr_random_low: invalid dimensions");
  if (!(rho > 0.0)) throw std::domain_error("essr_random_low: rho must be > 0");
  const double alpha = served * (bs - eve);
  const double beta = std::sqrt(served * (bs + eve));
  EssrPrediction out;
  out.regime = Regime::LowSnr;
  out.value = rectified_gaussian_mean(alpha * rho, beta * rho);
  return out;
}

EssrPrediction essr_random_large(int bs, int eve, int served, double rho) {
  require_counts(bs, eve, served);
  if (!(rho > 0.0)) throw std::domain_error("essr_random_large: rho must be > 0");
  EssrPrediction out;
  out.regime = Regime::LargeScale;
  out.value = positive_part(served * std::log((1.0 + bs * rho) / (1.0 + eve * rho)));
  return out;
}

EssrPrediction essr_greedy_high(int bs, int eve, int served, int total_users, Csi csi) {
  require_counts(bs, eve, served);
  if (served > bs) throw std::domain_error("essr_greedy_high: k exceeds M");
  if (total_users <= served)
    throw std::domain_error("essr_greedy_high: total users must exceed served users");
  double mean_gap = 0.0;
  double gain = 0.0;
  for (int l = 1; l <= served; ++l) {
    const int bs_l = bs - l + 1;
    const int eve_l = eve - l + 1;
    if (eve_l < 1) throw std::domain_error("essr_greedy_high: k exceeds N");
    mean_gap += digamma(bs_l) - digamma(eve_l);
    const double spread = csi == Csi::Full
                              ? std::sqrt(inverse_square_tail(bs_l) + inverse_square_tail(eve_l))
                              : std::sqrt(inverse_square_tail(bs_l));
    gain += spread * step_gain_factor(total_users, l);
  }
  EssrPrediction out;
  out.regime = Regime::HighSnr;
  out.gain = gain;
  out.value = positive_part(mean_gap + gain);
  return out;
}

EssrPrediction essr_tdma_high(int bs, int eve, int total_users, Csi csi) {
  require_counts(bs, eve, 1);
  if (total_users < 2) throw std::domain_error("essr_tdma_high: total users must be >= 2");
  const double log_k = std::log(static_cast<double>(total_users));
  const double gain = csi == Csi::Full
                          ? std::sqrt(2.0 * log_k * (1.0 / bs + 1.0 / eve))
                          : std::sqrt(2.0 * log_k / bs);
  EssrPrediction out;
  out.regime = Regime::HighSnr;
  out.gain = gain;
  out.value = positive_part(digamma(bs) - digamma(eve) + gain);
  return out;
}

double greedy_low_mean_rate(int bs, int eve, int served, int total_users, Csi csi) {
  require_counts(bs, eve, served);
  if (total_users <= served)
    throw std::domain_error("greedy_low_mean_rate: total users must exceed served users");
  const double sigma = csi == Csi::Full ? std::sqrt(static_cast<double>(bs + eve))
                                        : std::sqrt(static_cast<double>(bs));
  const double log_k = std::log(static_cast<double>(total_users));
  const double root = std::sqrt(2.0 * log_k);
  return bs + sigma * (root - std::log(4.0 * M_PI * log_k) / (2.0 * root) -
                       (digamma(served + 1) - 1.0) / root);
}

double greedy_low_mean_rate_by_order_stats(int bs, int eve, int served, int total_users,
                                           Csi csi) {
  require_counts(bs, eve, served);
  if (total_users <= served)
    throw std::domain_error("greedy_low_mean_rate_by_order_stats: total users must exceed served users");
  const double sigma = csi == Csi::Full ? std::sqrt(static_cast<double>(bs + eve))
                                        : std::sqrt(static_cast<double>(bs));
  double acc = 0.0;
  for (int r = 1; r <= served; ++r)
    acc += rth_order_mean(static_cast<double>(total_users), r, static_cast<double>(bs), sigma);
  return acc / served;
}

EssrPrediction essr_greedy_low(int bs, int eve, int served, int total_users, double rho,
                               Csi csi) {
  if (!(rho > 0.0)) throw std::domain_error("essr_greedy_low: rho must be > 0");
  const double mean_rate = greedy_low_mean_rate(bs, eve, served, total_users, csi);
  EssrPrediction out;
  out.regime = Regime::LowSnr;
  out.value = served * rho * positive_part(mean_rate - eve);
  out.gain = served * rho * (mean_rate - bs);
  return out;
}

EssrPrediction essr_tdma_low(int bs, int eve, int total_users, double rho, Csi csi) {
  require_counts(bs, eve, 1);
  if (total_users < 2) throw std::domain_error("essr_tdma_low: total users must be >= 2");
  if (!(rho > 0.0)) throw std::domain_error("essr_tdma_low: rho must be > 0");
  const double log_k = std::log(static_cast<double>(total_users));
  const double lift = csi == Csi::Full ? std::sqrt(2.0 * (bs + eve) * log_k)
                                       : std::sqrt(2.0 * bs * log_k);
  EssrPrediction out;
  out.regime = Regime::LowSnr;
  out.gain = rho * lift;
  out.value = rho * positive_part(bs - eve + lift);
  return out;
}

EssrPrediction essr_greedy_large(int bs, int eve, int served, int total_users, double rho,
                                 Csi csi) {
  require_counts(bs, eve, served);
  if (!(rho > 0.0)) throw std::domain_error("essr_greedy_large: rho must be > 0");
  if (total_users <= served)
    throw std::domain_error("essr_greedy_large: total users must exceed served users");
  const double spread = csi == Csi::Full ? std::sqrt(1.0 / bs + 1.0 / eve)
                                         : std::sqrt(1.0 / static_cast<double>(bs));
  double gain = 0.0;
  for (int r = 1; r <= served; ++r)
    gain += rth_order_mean(static_cast<double>(total_users), r, 0.0, spread);
  const double hardened = served * std::log((1.0 + rho * bs) / (1.0 + rho * eve));
  EssrPrediction out;
  out.regime = Regime::LargeScale;
  out.gain = gain;
  out.value = positive_part(hardened + gain);
  return out;
}

double per_user_secrecy_rate(int bs, int eve, int rank, int total_users, Regime regime) {
  require_counts(bs, eve, 1);
  if (rank < 1 || rank > bs)
    throw std::domain_error("per_user_secrecy_rate: rank must lie in [1, M]");
  if (regime == Regime::LowSnr) {
    const double rate = rth_order_mean(static_cast<double>(total_users), rank,
                                       static_cast<double>(bs), std::sqrt(static_cast<double>(bs)));
    return positive_part(rate - eve);
  }
  const int bs_l = bs - rank + 1;
  const double lift = std::sqrt(inverse_square_tail(bs_l)) * step_gain_factor(total_users, rank);
  return positive_part(digamma(bs_l) + lift - digamma(eve));
}

EssrPrediction essr_error_random_low(double bs, double eve, double served, double rho,
                                     double xi) {
  if (!(xi >= 0.0) || xi >= 1.0)
    throw std::domain_error("essr_error_random_low: xi must lie in [0, 1)");
  const double damp = 1.0 - xi;
  const double alpha = served * (damp * bs - eve);
  const double beta = std::sqrt(served * (damp * damp * bs + eve));
  if (!(rho > 0.0)) throw std::domain_error("essr_error_random_low: rho must be > 0");
  EssrPrediction out;
  out.regime = Regime::LowSnr;
  out.value = rectified_gaussian_mean(alpha * rho, beta * rho);
  return out;
}

EssrPrediction essr_error_greedy_low(int bs, int eve, int served, int total_users, double rho,
                                     double xi) {
  if (!(xi >= 0.0) || xi >= 1.0)
    throw std::domain_error("essr_error_greedy_low: xi must lie in [0, 1)");
  if (!(rho > 0.0)) throw std::domain_error("essr_error_greedy_low: rho must be > 0");
  const double mean_rate = greedy_low_mean_rate(bs, eve, served, total_users, Csi::Main);
  EssrPrediction out;
  out.regime = Regime::LowSnr;
  out.value = served * rho * positive_part((1.0 - xi) * mean_rate - eve);
  out.gain = served * rho * (1.0 - xi) * (mean_rate - bs);
  return out;
}

EssrPrediction essr_error_tdma(int bs, int eve, int total_users, double rho, double xi) {
  if (!(xi >= 0.0) || xi >= 1.0) throw std::domain_error("essr_error_tdma: xi must lie in [0, 1)");
  require_counts(bs, eve, 1);
  if (total_users < 2) throw std::domain_error("essr_error_tdma: total users must be >= 2");
  if (!(rho > 0.0)) throw std::domain_error("essr_error_tdma: rho must be > 0");
  const double damp = 1.0 - xi;
  const double lift = damp * std::sqrt(2.0 * bs * std::log(static_cast<double>(total_users)));
  EssrPrediction out;
  out.regime = Regime::LowSnr;
  out.gain = rho * lift;
  out.value = rho * positive_part(damp * bs - eve + lift);
  return out;
}

}  // namespace secrecy
