#include "secrecy/rates.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>

namespace secrecy {

namespace {

constexpr double kPivotTolerance = 1e-12;

void require_finite(const ComplexMatrix& m, const char* who) {
  if (!m.allFinite()) throw std::domain_error(std::string(who) + ": matrix has non-finite entries");
}

// Cholesky of a Hermitian positive-definite matrix; the log determinant of
// the leading l x l block is twice the accumulated log of the first l
// diagonal entries of L.
Eigen::LLT<ComplexMatrix> cholesky_or_throw(const ComplexMatrix& a, const char* who) {
  Eigen::LLT<ComplexMatrix> llt(a);
  if (llt.info() != Eigen::Success)
    throw SingularMatrixError(std::string(who) + ": Gram matrix is not positive definite");
  return llt;
}

}  // namespace

double sum_rate(const ComplexMatrix& users, double rho) {
  require_finite(users, "sum_rate");
  if (!(rho > 0.0)) throw std::domain_error("sum_rate: rho must be > 0");
  const Eigen::Index k = users.cols();
  if (k == 0) return 0.0;
  ComplexMatrix gram = ComplexMatrix::Identity(k, k);
  gram.noalias() += rho * (users.adjoint() * users);
  const auto llt = cholesky_or_throw(gram, "sum_rate");
  double total = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) total += std::log(llt.matrixLLT()(i, i).real());
  return 2.0 * total;
}

double log_det_gram(const ComplexMatrix& users) {
  require_finite(users, "log_det_gram");
  const Eigen::Index k = users.cols();
  if (k == 0) return 0.0;
  ComplexMatrix gram = users.adjoint() * users;
  Eigen::LDLT<ComplexMatrix> ldlt(gram);
  const Eigen::VectorXd d = ldlt.vectorD().real();
  const double threshold = kPivotTolerance * d.maxCoeff();
  double total = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (!(d(i) > threshold))
      throw SingularMatrixError("log_det_gram: rank-deficient column set");
    total += std::log(d(i));
  }
  return total;
}

RateBreakdown secrecy_sum_rate(const ComplexMatrix& main_users,
                               const ComplexMatrix& wiretap_users, double rho) {
  if (main_users.cols() != wiretap_users.cols())
    throw std::domain_error("secrecy_sum_rate: main and wiretap column counts differ");
  require_finite(main_users, "secrecy_sum_rate");
  require_finite(wiretap_users, "secrecy_sum_rate");
  if (!(rho > 0.0)) throw std::domain_error("secrecy_sum_rate: rho must be > 0");

  RateBreakdown out;
  const Eigen::Index k = main_users.cols();
  out.per_step.resize(static_cast<std::size_t>(k));
  if (k > 0) {
    ComplexMatrix gram = ComplexMatrix::Identity(k, k);
    gram.noalias() += rho * (main_users.adjoint() * main_users);
    const auto llt = cholesky_or_throw(gram, "secrecy_sum_rate");
    double total = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) {
      const double step = 2.0 * std::log(llt.matrixLLT()(i, i).real());
      out.per_step[static_cast<std::size_t>(i)] = step;
      total += step;
    }
    out.bs_rate = total;
    out.eve_rate = sum_rate(wiretap_users, rho);
  }
  out.secrecy_rate = std::max(out.bs_rate - out.eve_rate, 0.0);
  return out;
}

double lower_bound_sum_rate(const ComplexMatrix& estimate_users, double rho, double xi) {
  return sum_rate(estimate_users, snr_loss_factor(rho, xi) * rho);
}

ComplexMatrix projection_complement(const ComplexMatrix& prefix) {
  require_finite(prefix, "projection_complement");
  const Eigen::Index m = prefix.rows();
  const Eigen::Index l = prefix.cols();
  if (l == 0) return ComplexMatrix::Identity(m, m);
  if (l > m) throw std::domain_error("projection_complement: more columns than dimensions");
  ComplexMatrix gram = prefix.adjoint() * prefix;
  Eigen::LDLT<ComplexMatrix> ldlt(gram);
  const Eigen::VectorXd d = ldlt.vectorD().real();
  const double threshold = kPivotTolerance * d.maxCoeff();
  for (Eigen::Index i = 0; i < l; ++i)
    if (!(d(i) > threshold))
      throw SingularMatrixError("projection_complement: rank-deficient prefix");
  ComplexMatrix result = ComplexMatrix::Identity(m, m);
  result.noalias() -= prefix * ldlt.solve(prefix.adjoint());
  return result;
}

std::vector<double> sic_chain_logdet(const ComplexMatrix& users, std::span<const int> ordering) {
  const Eigen::Index k = users.cols();
  if (static_cast<Eigen::Index>(ordering.size()) != k)
    throw std::domain_error("sic_chain_logdet: ordering length must match column count");
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  for (int idx : ordering) {
    if (idx < 0 || idx >= k || seen[static_cast<std::size_t>(idx)])
      throw std::domain_error("sic_chain_logdet: ordering is not a permutation");
    seen[static_cast<std::size_t>(idx)] = 1;
  }

  std::vector<double> steps;
  steps.reserve(ordering.size());
  ComplexMatrix prefix(users.rows(), 0);
  for (std::size_t l = 0; l < ordering.size(); ++l) {
    const ComplexMatrix complement = projection_complement(prefix);
    const Eigen::VectorXcd column = users.col(ordering[l]);
    const double quad = (column.adjoint() * complement * column)(0, 0).real();
    if (!(quad > 0.0))
      throw SingularMatrixError("sic_chain_logdet: column lies in the span of its prefix");
    steps.push_back(std::log(quad));
    prefix.conservativeResize(Eigen::NoChange, prefix.cols() + 1);
    prefix.col(prefix.cols() - 1) = column;
  }
  return steps;
}

double low_snr_rate(const ComplexMatrix& users, double rho) {
  require_finite(users, "low_snr_rate");
  if (!(rho > 0.0)) throw std::domain_error("low_snr_rate: rho must be > 0");
  return rho * users.squaredNorm();
}

}  // namespace secrecy
