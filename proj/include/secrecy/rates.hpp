#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "secrecy/channel.hpp"

namespace secrecy {

// Raised when a Gram matrix is numerically rank deficient (pivot below
// 1e-12 times the largest diagonal entry). Never silently regularized.
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RateBreakdown {
  double bs_rate = 0.0;       // nats, achieved at the base station
  double eve_rate = 0.0;      // nats, leaked to the eavesdropper
  double secrecy_rate = 0.0;  // nats, max(bs_rate - eve_rate, 0)
  // Exact per-user MMSE-SIC increments of bs_rate in column order; sums to
  // bs_rate up to rounding.
  std::vector<double> per_step;
};

// log det(I + rho * H^H H) in nats for the served-user columns H.
double sum_rate(const ComplexMatrix& users, double rho);

// log det(H^H H); throws SingularMatrixError on rank deficiency.
double log_det_gram(const ComplexMatrix& users);

RateBreakdown secrecy_sum_rate(const ComplexMatrix& main_users,
                               const ComplexMatrix& wiretap_users, double rho);

// Sum-rate guaranteed under estimation error variance xi: the exact rate of
// the estimate at the reduced SNR rho * (1-xi)/(1+xi*rho).
double lower_bound_sum_rate(const ComplexMatrix& estimate_users, double rho, double xi);

// Orthogonal complement of the column span of `prefix` (Hermitian idempotent,
// rank = rows - cols). An empty prefix yields the identity.
ComplexMatrix projection_complement(const ComplexMatrix& prefix);

// Per-step values log(h_l^H A_{l-1} h_l) along `ordering`, where A_{l-1}
// projects onto the complement of the previously taken columns. The sum
// equals log_det_gram for every ordering; built from explicit projectors so
// it serves as an independent route to the log determinant.
std::vector<double> sic_chain_logdet(const ComplexMatrix& users, std::span<const int> ordering);

// First-order expansion rho * tr(H^H H); accurate for rho << 1.
double low_snr_rate(const ComplexMatrix& users, double rho);

}  // namespace secrecy
