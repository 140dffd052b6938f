#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "secrecy/channel.hpp"
#include "secrecy/rates.hpp"

using namespace secrecy;

namespace {

ComplexMatrix draw(int rows, int cols, std::uint64_t salt) {
  return sample_gaussian_matrix(rows, cols, {1000 + salt, 0, StreamRole::MainChannel});
}

// Independent route: sum of log(1 + rho * eigenvalue) over the Gram spectrum.
double eigen_route_sum_rate(const ComplexMatrix& h, double rho) {
  const ComplexMatrix gram = h.adjoint() * h;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    acc += std::log1p(rho * std::max(es.eigenvalues()(i), 0.0));
  return acc;
}

}  // namespace

TEST_SUITE_BEGIN("rates");

TEST_CASE("sum rate basics") {
  ComplexMatrix h(4, 1);
  h << std::complex<double>(1, 0), std::complex<double>(0, 1), 0, 0;  // squared norm 2
  CHECK(sum_rate(h, 1.0) == doctest::Approx(std::log(3.0)).epsilon(1e-12));

  const ComplexMatrix zero = ComplexMatrix::Zero(5, 3);
  CHECK(sum_rate(zero, 7.0) == 0.0);

  const ComplexMatrix g = draw(10, 3, 1);
  CHECK(sum_rate(g, 10.0) == doctest::Approx(eigen_route_sum_rate(g, 10.0)).epsilon(1e-9));

  ComplexMatrix bad = g;
  bad(0, 0) = std::complex<double>(std::nan(""), 0.0);
  CHECK_THROWS_AS(sum_rate(bad, 1.0), std::domain_error);
  CHECK_THROWS_AS(sum_rate(g, 0.0), std::domain_error);
}

TEST_CASE("sum rate invariances") {
  for (int salt = 0; salt < 50; ++salt) {
    const ComplexMatrix h = draw(8, 4, 100 + salt);
    const double reference = sum_rate(h, 3.0);

    ComplexMatrix permuted(8, 4);
    const int perm[] = {2, 0, 3, 1};
    for (int j = 0; j < 4; ++j) permuted.col(j) = h.col(perm[j]);
    CHECK(sum_rate(permuted, 3.0) == doctest::Approx(reference).epsilon(1e-9));

    const Eigen::HouseholderQR<ComplexMatrix> qr(draw(8, 8, 900 + salt));
    const ComplexMatrix q = qr.householderQ();
    CHECK(sum_rate(q * h, 3.0) == doctest::Approx(reference).epsilon(1e-9));
  }
}

TEST_CASE("secrecy sum rate") {
  const ComplexMatrix h = draw(10, 3, 2);
  SUBCASE("identical channels leak everything") {
    const auto rb = secrecy_sum_rate(h, h, 100.0);
    CHECK(rb.secrecy_rate == 0.0);
    CHECK(rb.bs_rate == doctest::Approx(rb.eve_rate).epsilon(1e-12));
  }
  SUBCASE("silent eavesdropper keeps the full rate") {
    const auto rb = secrecy_sum_rate(h, ComplexMatrix::Zero(15, 3), 100.0);
    CHECK(rb.secrecy_rate == doctest::Approx(rb.bs_rate).epsilon(1e-12));
  }
  SUBCASE("matches an independent recomputation") {
    const ComplexMatrix g = draw(15, 3, 3);
    const auto rb = secrecy_sum_rate(h, g, 1000.0);
    CHECK(rb.bs_rate == doctest::Approx(eigen_route_sum_rate(h, 1000.0)).epsilon(1e-9));
    CHECK(rb.eve_rate == doctest::Approx(eigen_route_sum_rate(g, 1000.0)).epsilon(1e-9));
    CHECK(rb.secrecy_rate == std::max(rb.bs_rate - rb.eve_rate, 0.0));
  }
  SUBCASE("per-step increments sum to the total") {
    const ComplexMatrix g = draw(15, 3, 4);
    const auto rb = secrecy_sum_rate(h, g, 10.0);
    CHECK(rb.per_step.size() == 3);
    const double total = std::accumulate(rb.per_step.begin(), rb.per_step.end(), 0.0);
    CHECK(total == doctest::Approx(rb.bs_rate).epsilon(1e-12));
  }
  SUBCASE("rejects mismatched column counts") {
    CHECK_THROWS_AS(secrecy_sum_rate(h, draw(15, 2, 5), 1.0), std::domain_error);
  }
  SUBCASE("never negative, even with a dominant eavesdropper") {
    for (int salt = 0; salt < 200; ++salt) {
      const ComplexMatrix hm = draw(4, 3, 4000 + salt);
      const ComplexMatrix gm = draw(12, 3, 5000 + salt);
      CHECK(secrecy_sum_rate(hm, gm, 1000.0).secrecy_rate >= 0.0);
    }
  }
}

TEST_CASE("estimated-channel lower bound") {
  const ComplexMatrix h = draw(10, 2, 6);
  CHECK(lower_bound_sum_rate(h, 5.0, 0.0) == sum_rate(h, 5.0));  // bitwise
  CHECK(lower_bound_sum_rate(h, 5.0, 0.999999) < 1e-4);
  const double rho = 1e-3, xi = 0.1;
  const double effective = (1.0 - xi) / (1.0 + xi * rho) * rho;
  CHECK(lower_bound_sum_rate(h, rho, xi) == doctest::Approx(sum_rate(h, effective)).epsilon(1e-12));
  CHECK(effective == doctest::Approx(0.0009).epsilon(2e-4));  // low SNR: eta ~ 1 - xi

  // on average the bound sits below the true-channel rate
  double bound_sum = 0.0, true_sum = 0.0;
  for (int t = 0; t < 10000; ++t) {
    SystemConfig cfg;
    cfg.bs_antennas = 10;
    cfg.eve_antennas = 10;
    cfg.total_users = 2;
    cfg.served_users = 2;
    cfg.snr = 10.0;
    const StreamKey est_key{31, static_cast<std::uint64_t>(t), StreamRole::MainChannel};
    const StreamKey err_key{31, static_cast<std::uint64_t>(t), StreamRole::EstimationError};
    const ComplexMatrix estimate = sample_gaussian_matrix(10, 2, est_key);
    const auto model = corrupt_estimate(estimate, xi, err_key);
    bound_sum += lower_bound_sum_rate(model.estimate, 10.0, xi);
    true_sum += sum_rate(model.realized, 10.0);
  }
  CHECK(bound_sum < true_sum);
}

TEST_CASE("projection complement") {
  CHECK(projection_complement(ComplexMatrix(5, 0)) == ComplexMatrix::Identity(5, 5));

  ComplexMatrix e1 = ComplexMatrix::Zero(4, 1);
  e1(0, 0) = 1.0;
  ComplexMatrix expected = ComplexMatrix::Identity(4, 4);
  expected(0, 0) = 0.0;
  CHECK((projection_complement(e1) - expected).cwiseAbs().maxCoeff() < 1e-14);

  const ComplexMatrix prefix = draw(10, 3, 7);
  const ComplexMatrix a = projection_complement(prefix);
  CHECK((a * a - a).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((a - a.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((a * prefix).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(a.trace().real() == doctest::Approx(10.0 - 3.0).epsilon(1e-10));

  ComplexMatrix deficient(10, 2);
  deficient.col(0) = prefix.col(0);
  deficient.col(1) = 2.0 * prefix.col(0);
  CHECK_THROWS_AS(projection_complement(deficient), SingularMatrixError);
}

TEST_CASE("sic chain decomposition") {
  ComplexMatrix single(6, 1);
  single.setZero();
  single(2, 0) = std::complex<double>(3.0, 4.0);  // norm^2 = 25
  const std::vector<int> order0 = {0};
  const auto one = sic_chain_logdet(single, order0);
  CHECK(one.size() == 1);
  CHECK(one[0] == doctest::Approx(std::log(25.0)).epsilon(1e-12));

  // orthonormal columns decompose into all-zero steps
  const Eigen::HouseholderQR<ComplexMatrix> qr(draw(6, 6, 8));
  const ComplexMatrix q = ComplexMatrix(qr.householderQ()).leftCols(3);
  const std::vector<int> order3 = {0, 1, 2};
  for (double step : sic_chain_logdet(q, order3)) CHECK(std::abs(step) < 1e-10);

  // the sum is ordering-invariant and equals the log determinant
  const ComplexMatrix h = draw(10, 4, 9);
  const double reference = log_det_gram(h);
  std::vector<int> order = {0, 1, 2, 3};
  std::sort(order.begin(), order.end());
  do {
    const auto steps = sic_chain_logdet(h, order);
    const double total = std::accumulate(steps.begin(), steps.end(), 0.0);
    CHECK(total == doctest::Approx(reference).epsilon(1e-9));
  } while (std::next_permutation(order.begin(), order.end()));

  const std::vector<int> not_perm = {0, 0, 1, 2};
  CHECK_THROWS_AS(sic_chain_logdet(h, not_perm), std::domain_error);
}

TEST_CASE("low snr expansion") {
  ComplexMatrix unit(3, 1);
  unit.setZero();
  unit(1, 0) = 1.0;
  CHECK(low_snr_rate(unit, 1e-3) == doctest::Approx(1e-3).epsilon(1e-15));
  CHECK(low_snr_rate(ComplexMatrix::Zero(4, 2), 1e-3) == 0.0);

  const ComplexMatrix h = draw(10, 2, 10);
  CHECK(low_snr_rate(h, 1e-3) == doctest::Approx(sum_rate(h, 1e-3)).epsilon(2e-3));

  double previous_gap = 1.0;
  for (double rho : {1e-2, 1e-3, 1e-4}) {
    const double gap = std::abs(low_snr_rate(h, rho) / sum_rate(h, rho) - 1.0);
    CHECK(gap < previous_gap);
    previous_gap = gap;
  }
}

TEST_SUITE_END();
