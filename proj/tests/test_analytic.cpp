#include <doctest.h>

#include <cmath>

#include "secrecy/analytic.hpp"
#include "secrecy/channel.hpp"
#include "secrecy/rates.hpp"
#include "secrecy/special_math.hpp"

using namespace secrecy;

TEST_SUITE_BEGIN("analytic");

TEST_CASE("capacity gaussian approximation") {
  const auto one = capacity_gaussian(10, 1, 1000.0);
  CHECK(one.mean == doctest::Approx(9.1595078681).epsilon(1e-9));
  CHECK(one.variance == doctest::Approx(0.1).epsilon(1e-12));

  // square case: variance telescopes to H_{M-1} + 1
  for (int m : {2, 5, 20, 40}) {
    const auto sq = capacity_gaussian(m, m, 10.0);
    CHECK(sq.variance == doctest::Approx(harmonic(m - 1) + 1.0).epsilon(1e-12));
  }

  // symmetric up to the log-rho coefficient min(M, k)
  const auto a = capacity_gaussian(20, 3, 1000.0);
  const auto b = capacity_gaussian(3, 20, 1000.0);
  CHECK(a.mean == doctest::Approx(b.mean).epsilon(1e-12));
  CHECK(a.variance == doctest::Approx(b.variance).epsilon(1e-12));

  CHECK_THROWS_AS(capacity_gaussian(0, 1, 1.0), std::domain_error);
  CHECK_THROWS_AS(capacity_gaussian(1, 1, 0.0), std::domain_error);
}

TEST_CASE("capacity gaussian matches sampled log-determinant moments") {
  const int bs = 20, served = 3;
  const double rho = 1000.0;
  const long trials = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (long t = 0; t < trials; ++t) {
    const ComplexMatrix h = sample_gaussian_matrix(
        bs, served, {7777, static_cast<std::uint64_t>(t), StreamRole::MainChannel});
    const double c = sum_rate(h, rho);
    sum += c;
    sumsq += c * c;
  }
  const double mc_mean = sum / trials;
  const double mc_var = sumsq / trials - mc_mean * mc_mean;
  const auto approx = capacity_gaussian(bs, served, rho);
  CHECK(std::abs(mc_mean - approx.mean) / approx.mean < 0.01);
  CHECK(std::abs(mc_var - approx.variance) / approx.variance < 0.05);
}

TEST_CASE("random selection, high snr") {
  // equal antenna counts shrink the value to sigma / sqrt(2 pi)
  for (int k : {1, 5, 10}) {
    const auto p = essr_random_high(10, 10, k, 1000.0);
    const auto g = capacity_gaussian(10, k, 1000.0);
    CHECK(p.value == doctest::Approx(std::sqrt(2.0 * g.variance / (2.0 * M_PI))).epsilon(1e-12));
    CHECK(p.gain == 0.0);
  }
  CHECK(essr_random_high(10, 10, 10, 1000.0).value == doctest::Approx(1.1039920508).epsilon(1e-9));

  // mean-dominated once the base station out-ranks the eavesdropper
  const double mu = capacity_gaussian(11, 11, 1000.0).mean - capacity_gaussian(10, 11, 1000.0).mean;
  const double value = essr_random_high(11, 10, 11, 1000.0).value;
  CHECK(std::abs(value - mu) / mu < 0.01);

  // positivity and rho-independence below the eavesdropper rank
  for (double rho : {10.0, 1000.0, 100000.0}) {
    CHECK(essr_random_high(15, 10, 8, rho).value ==
          doctest::Approx(essr_random_high(15, 10, 8, 1000.0).value).epsilon(1e-12));
    CHECK(essr_random_high(10, 15, 12, rho).value > 0.0);
  }
}

TEST_CASE("random high-snr corollaries") {
  const auto equal = essr_random_high_corollaries(20, 20, 20, 1000.0);
  REQUIRE(equal.peak_value.has_value());
  CHECK(*equal.peak_value == doctest::Approx(1.1997030361).epsilon(1e-9));
  CHECK_FALSE(equal.upper_bound.has_value());

  const auto strong = essr_random_high_corollaries(15, 10, 8, 1000.0);
  CHECK(strong.rho_independent);
  CHECK_FALSE(strong.mean_dominated.has_value());
  const auto strong_k = essr_random_high_corollaries(15, 10, 12, 1000.0);
  CHECK_FALSE(strong_k.rho_independent);
  REQUIRE(strong_k.mean_dominated.has_value());

  const auto weak = essr_random_high_corollaries(10, 15, 12, 1000.0);
  REQUIRE(weak.upper_bound.has_value());
  CHECK(*weak.upper_bound >= essr_random_high(10, 15, 12, 1000.0).value);

  // single-antenna equality case has no peak approximation
  const auto tiny = essr_random_high_corollaries(1, 1, 1, 1000.0);
  CHECK_FALSE(tiny.peak_value.has_value());
}

TEST_CASE("tail consistency of the rectified mean") {
  // once the mean dominates the spread the rectification is negligible
  const double v = rectified_gaussian_mean(5.0, 1.0);
  CHECK(std::abs(v - 5.0) / 5.0 < 1e-3);
}

TEST_CASE("equal-antenna value is unimodal in k with the peak at k = M") {
  const int m = 20;
  double prev = essr_random_high(m, m, 1, 1000.0).value;
  for (int k = 2; k <= m; ++k) {
    const double v = essr_random_high(m, m, k, 1000.0).value;
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
  for (int k = m + 1; k <= 2 * m; ++k) {
    const double v = essr_random_high(m, m, k, 1000.0).value;
    CHECK(v <= prev + 1e-12);
    prev = v;
  }
}

TEST_CASE("random selection, low snr") {
  CHECK(essr_random_low(10.0, 10.0, 4.0, 1e-3).value ==
        doctest::Approx(1e-3 * std::sqrt(4.0 * 10.0 / M_PI)).epsilon(1e-12));
  CHECK(essr_random_low(10.0, 15.0, 1.0, 1e-3).value ==
        doctest::Approx(4.165773529e-4).epsilon(1e-9));
  for (double rho : {1e-2, 1e-3, 1e-4})
    CHECK(essr_random_low(10.0, 15.0, 3.0, rho).value / rho ==
          doctest::Approx(essr_random_low(10.0, 15.0, 3.0, 1e-3).value / 1e-3).epsilon(1e-12));
}

TEST_CASE("random selection, large arrays") {
  CHECK(essr_random_large(100, 100, 5, 10.0).value == 0.0);
  CHECK(essr_random_large(100, 50, 4, 10.0).value == doctest::Approx(2.7685947131).epsilon(1e-9));
  CHECK(essr_random_large(50, 100, 4, 10.0).value == 0.0);
}

TEST_CASE("greedy selection, high snr") {
  // equal antennas: full-CSI gain outpaces main-CSI by exactly sqrt(2)
  for (int k : {1, 3, 7}) {
    const auto main = essr_greedy_high(20, 20, k, 400, Csi::Main);
    const auto full = essr_greedy_high(20, 20, k, 400, Csi::Full);
    CHECK(full.gain == doctest::Approx(std::sqrt(2.0) * main.gain).epsilon(1e-12));
    CHECK(main.value == doctest::Approx(main.gain).epsilon(1e-12));
  }
  CHECK(essr_greedy_high(20, 20, 1, 400, Csi::Main).gain ==
        doctest::Approx(0.6802438662).epsilon(1e-9));
  // leading-order strongest-user lift
  CHECK(std::sqrt(2.0 * std::log(400.0) / 20.0) == doctest::Approx(0.7740).epsilon(1e-3));

  // per-step spreads sit inside the tail bracket
  for (int l = 1; l <= 3; ++l) {
    const double spread2 = inverse_square_tail(20 - l + 1);
    CHECK(spread2 > 1.0 / (20 - l + 1));
    CHECK(spread2 < 1.0 / (20 - l));
  }

  CHECK_THROWS_AS(essr_greedy_high(20, 25, 21, 400, Csi::Main), std::domain_error);
  CHECK_THROWS_AS(essr_greedy_high(20, 25, 5, 5, Csi::Main), std::domain_error);
}

TEST_CASE("strongest-user scheduling, high snr") {
  CHECK(essr_tdma_high(20, 20, 400, Csi::Main).value ==
        doctest::Approx(std::sqrt(2.0 * std::log(400.0) / 20.0)).epsilon(1e-12));
  CHECK(essr_tdma_high(20, 25, 400, Csi::Main).value ==
        doctest::Approx(0.5458269914).epsilon(1e-9));
  CHECK(digamma(20) - digamma(25) == doctest::Approx(-0.2282185206).epsilon(1e-9));
  const double main_gain = essr_tdma_high(20, 25, 400, Csi::Main).gain;
  const double full_gain = essr_tdma_high(20, 25, 400, Csi::Full).gain;
  CHECK(full_gain > main_gain);
  CHECK_THROWS_AS(essr_tdma_high(20, 25, 1, Csi::Main), std::domain_error);
}

TEST_CASE("greedy selection, low snr") {
  // the two mean-rate routes are the same function
  for (int bs : {10, 20})
    for (int eve : {10, 15, 25})
      for (int total : {100, 400})
        for (int served = 1; served <= 8; ++served)
          for (Csi csi : {Csi::Main, Csi::Full})
            CHECK(greedy_low_mean_rate(bs, eve, served, total, csi) ==
                  doctest::Approx(greedy_low_mean_rate_by_order_stats(bs, eve, served, total, csi))
                      .epsilon(1e-13));

  // k = 1 collapses to the strongest-user order statistic
  for (Csi csi : {Csi::Main, Csi::Full}) {
    const double sigma = csi == Csi::Full ? std::sqrt(25.0) : std::sqrt(10.0);
    const double expected = 1e-3 * std::max(rth_order_mean(400.0, 1, 10.0, sigma) - 15.0, 0.0);
    CHECK(essr_greedy_low(10, 15, 1, 400, 1e-3, csi).value ==
          doctest::Approx(expected).epsilon(1e-12));
  }

  // exact value for the reference configuration
  CHECK(essr_greedy_low(10, 15, 1, 400, 1e-3, Csi::Main).value ==
        doctest::Approx(4.5001287e-3).epsilon(1e-7));
  // leading-order strongest-user form
  CHECK(essr_tdma_low(10, 15, 400, 1e-3, Csi::Main).value ==
        doctest::Approx(5.9466566e-3).epsilon(1e-7));
  CHECK(essr_tdma_low(10, 15, 400, 1e-3, Csi::Full).value ==
        doctest::Approx(1e-3 * (std::sqrt(2.0 * 25.0 * std::log(400.0)) - 5.0)).epsilon(1e-12));

  // strictly increasing in the population size
  double prev = 0.0;
  for (int total : {50, 100, 200, 400, 800}) {
    const double v = essr_greedy_low(10, 15, 3, total, 1e-3, Csi::Main).value;
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("greedy selection, large arrays") {
  CHECK(essr_greedy_large(100, 100, 1, 400, 10.0, Csi::Main).gain ==
        doctest::Approx(0.3004204485).epsilon(1e-9));
  for (int k : {1, 4, 8}) {
    const auto main = essr_greedy_large(100, 100, k, 400, 10.0, Csi::Main);
    const auto full = essr_greedy_large(100, 100, k, 400, 10.0, Csi::Full);
    CHECK(full.gain / main.gain == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  }
  const auto lopsided_main = essr_greedy_large(100, 50, 2, 400, 10.0, Csi::Main);
  const auto lopsided_full = essr_greedy_large(100, 50, 2, 400, 10.0, Csi::Full);
  CHECK(lopsided_full.gain / lopsided_main.gain ==
        doctest::Approx(std::sqrt(1.0 + 100.0 / 50.0)).epsilon(1e-12));
  // as rho grows with equal antennas only the selection gain survives
  const auto saturated = essr_greedy_large(100, 100, 3, 400, 1e12, Csi::Main);
  CHECK(saturated.value == doctest::Approx(saturated.gain).epsilon(1e-9));
}

TEST_CASE("per-user secrecy rates") {
  CHECK(per_user_secrecy_rate(20, 20, 1, 400, Regime::HighSnr) > 0.0);
  double prev = per_user_secrecy_rate(20, 25, 1, 400, Regime::HighSnr);
  for (int l = 2; l <= 5; ++l) {
    const double v = per_user_secrecy_rate(20, 25, l, 400, Regime::HighSnr);
    CHECK(v <= prev);
    prev = v;
  }
  // first user's low-SNR rate matches the k = 1 aggregate up to the rho factor
  const double per_unit = per_user_secrecy_rate(10, 15, 1, 400, Regime::LowSnr);
  CHECK(1e-3 * per_unit ==
        doctest::Approx(essr_greedy_low(10, 15, 1, 400, 1e-3, Csi::Main).value).epsilon(1e-12));
  CHECK_THROWS_AS(per_user_secrecy_rate(10, 15, 11, 400, Regime::HighSnr), std::domain_error);
}

TEST_CASE("estimation-error closed forms") {
  // zero error variance reproduces the clean formulas exactly
  CHECK(essr_error_random_low(10.0, 15.0, 3.0, 1e-3, 0.0).value ==
        essr_random_low(10.0, 15.0, 3.0, 1e-3).value);
  CHECK(essr_error_tdma(10, 15, 400, 1e-3, 0.0).value ==
        essr_tdma_low(10, 15, 400, 1e-3, Csi::Main).value);
  CHECK(essr_error_greedy_low(10, 15, 4, 400, 1e-3, 0.0).value ==
        essr_greedy_low(10, 15, 4, 400, 1e-3, Csi::Main).value);

  // balanced special case
  CHECK(essr_error_random_low(10.0 / 0.9, 10.0, 2.0, 1e-3, 0.1).value ==
        doctest::Approx(2.4592454e-3).epsilon(1e-7));

  // estimation errors only ever cost rate for the strongest-user scheme
  for (double xi : {0.05, 0.1, 0.3, 0.7})
    CHECK(essr_error_tdma(10, 15, 400, 1e-3, xi).value <
          essr_tdma_low(10, 15, 400, 1e-3, Csi::Main).value);

  CHECK_THROWS_AS(essr_error_random_low(10.0, 15.0, 2.0, 1e-3, 1.0), std::domain_error);
  CHECK_THROWS_AS(essr_error_tdma(10, 15, 400, 1e-3, -0.1), std::domain_error);
}

TEST_CASE("predictions stay nonnegative with gains monotone in population") {
  for (int total : {50, 100, 200, 400}) {
    for (Csi csi : {Csi::Main, Csi::Full}) {
      const auto high = essr_greedy_high(20, 25, 5, total, csi);
      CHECK(high.value >= 0.0);
      CHECK(high.gain >= 0.0);
      const auto large = essr_greedy_large(100, 120, 5, total, 10.0, csi);
      CHECK(large.value >= 0.0);
      CHECK(large.gain >= 0.0);
    }
  }
  for (Csi csi : {Csi::Main, Csi::Full}) {
    double prev_gain = 0.0;
    for (int total : {50, 100, 200, 400}) {
      const double gain = essr_greedy_high(20, 25, 5, total, csi).gain;
      CHECK(gain >= prev_gain);
      prev_gain = gain;
    }
  }
}

TEST_SUITE_END();
