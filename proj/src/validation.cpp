#include "secrecy/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <ostream>
#include <utility>

#include "secrecy/analytic.hpp"
#include "secrecy/channel.hpp"
#include "secrecy/montecarlo.hpp"
#include "secrecy/rates.hpp"
#include "secrecy/rng.hpp"
#include "secrecy/selection.hpp"
#include "secrecy/special_math.hpp"

namespace secrecy {

namespace {

struct Tolerances {
  long divisor = 1;      // trial-count divisor
  double stretch = 1.0;  // multiplier on stochastic relative tolerances
};

struct Checks {
  std::vector<std::string> lines;
  bool ok = true;

  void add(bool condition, const std::string& text) {
    lines.push_back(std::string(condition ? "ok   " : "FAIL ") + text);
    ok = ok && condition;
  }
};

std::string fmt(const char* pattern, ...) {
  char buf[256];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return buf;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

ExperimentSpec make_spec(int bs, int eve, int total, int served, double snr_db,
                         Strategy strategy, Regime regime, long trials, std::uint64_t seed,
                         int threads, double xi = 0.0) {
  ExperimentSpec spec;
  spec.config.bs_antennas = bs;
  spec.config.eve_antennas = eve;
  spec.config.total_users = total;
  spec.config.served_users = served;
  spec.config.snr = db_to_linear(snr_db);
  spec.config.error_variance = xi;
  spec.strategy = strategy;
  spec.regime = regime;
  spec.trials = trials;
  spec.master_seed = seed;
  spec.threads = threads;
  return spec;
}

// Rectified secrecy rate for every prefix length of `order`, evaluated from
// one Cholesky factorization per side (leading principal minors give the
// chain of log determinants).
std::vector<double> prefix_secrecy_rates(const ComplexMatrix& main, const ComplexMatrix& tap,
                                         const std::vector<int>& order, double main_snr,
                                         double tap_snr) {
  const int count = static_cast<int>(order.size());
  ComplexMatrix h(main.rows(), count), g(tap.rows(), count);
  for (int i = 0; i < count; ++i) {
    h.col(i) = main.col(order[static_cast<std::size_t>(i)]);
    g.col(i) = tap.col(order[static_cast<std::size_t>(i)]);
  }
  ComplexMatrix gb = ComplexMatrix::Identity(count, count);
  gb.noalias() += main_snr * (h.adjoint() * h);
  ComplexMatrix ge = ComplexMatrix::Identity(count, count);
  ge.noalias() += tap_snr * (g.adjoint() * g);
  const Eigen::LLT<ComplexMatrix> lb(gb), le(ge);
  std::vector<double> out(static_cast<std::size_t>(count));
  double cb = 0.0, ce = 0.0;
  for (int l = 0; l < count; ++l) {
    cb += 2.0 * std::log(lb.matrixLLT()(l, l).real());
    ce += 2.0 * std::log(le.matrixLLT()(l, l).real());
    out[static_cast<std::size_t>(l)] = std::max(cb - ce, 0.0);
  }
  return out;
}

struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;
};

MeanStderr reduce(const std::vector<double>& values) {
  const long n = static_cast<long>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, n > 1 ? std::sqrt(ss / (n - 1) / n) : 0.0};
}

// ---------------------------------------------------------------------------
// Criterion 1: strongest-channel-energy table, K = 100.

CriterionResult criterion_energy_table(const ValidationOptions& opt, const Tolerances& tol) {
  Checks c;
  const long trials = std::max(10000L / tol.divisor, 500L);
  const auto start = std::chrono::steady_clock::now();
  const auto rows = run_energy_table(100, {10, 20, 30, 40, 50}, trials, opt.seed, opt.threads);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const double expected_numerical[] = {19.7119, 33.0152, 45.5815, 57.6518, 69.5151};
  const double expected_analytical[] = {18.0842, 31.4328, 44.0023, 56.1684, 68.0768};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double rel = std::abs(rows[i].numerical - expected_numerical[i]) / expected_numerical[i];
    c.add(rel <= 0.02 * tol.stretch,
          fmt("M=%d numerical %.4f vs %.4f (rel %.4f <= %.3f)", rows[i].degrees,
              rows[i].numerical, expected_numerical[i], rel, 0.02 * tol.stretch));
    const double gap = std::abs(rows[i].analytical - expected_analytical[i]);
    c.add(gap <= 5e-4, fmt("M=%d analytical %.5f vs %.4f (abs %.2e <= 5e-4)", rows[i].degrees,
                           rows[i].analytical, expected_analytical[i], gap));
  }
  c.add(seconds < 30.0, fmt("runtime %.1f s < 30 s", seconds));
  return {1, "energy-table", c.ok, seconds, c.lines};
}

// ---------------------------------------------------------------------------
// Criterion 2: equal antenna counts; the peak over k sits at k = M.

CriterionResult criterion_equal_antenna_peak(const ValidationOptions& opt, const Tolerances& tol) {
  Checks c;
  const long trials = std::max(10000L / tol.divisor, 500L);
  const auto start = std::chrono::steady_clock::now();
  int best_k = 0;
  double best_value = -1.0, value_at_20 = 0.0;
  for (int k = 1; k <= 40; ++k) {
    const auto spec =
        make_spec(20, 20, k, k, 30.0, Strategy::Random, Regime::HighSnr, trials, opt.seed,
                  opt.threads);
    const double mc = run_point(spec).mc_mean;
    if (mc > best_value) {
      best_value = mc;
      best_k = k;
    }
    if (k == 20) value_at_20 = mc;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.add(std::abs(best_k - 20) <= 1, fmt("peak at k=%d (expected 20 +- 1)", best_k));
  const double reference = 1.1997;
  const double rel = std::abs(value_at_20 - reference) / reference;
  c.add(rel <= 0.08 * tol.stretch, fmt("mc at k=20: %.4f vs %.4f (rel %.4f <= %.3f)",
                                       value_at_20, reference, rel, 0.08 * tol.stretch));
  c.add(seconds < 120.0, fmt("runtime %.1f s < 120 s", seconds));
  return {2, "equal-antenna-peak", c.ok, seconds, c.lines};
}

// ---------------------------------------------------------------------------
// Criterion 3: random scheduling, high SNR, closed form within 8% wherever it
// predicts at least 0.2 nats.

CriterionResult criterion_random_high_accuracy(const ValidationOptions& opt,
                                               const Tolerances& tol) {
  Checks c;
  const long trials = std::max(20000L / tol.divisor, 1000L);
  const auto start = std::chrono::steady_clock::now();
  for (int bs : {21, 20, 19}) {
    double worst = 0.0;
    int worst_k = 0;
    int gated = 0;
    for (int k = 1; k <= 30; ++k) {
      const double analytic = essr_random_high(bs, 20, k, db_to_linear(30.0)).value;
      if (analytic < 0.2) continue;
      ++gated;
      const auto spec = make_spec(bs, 20, k, k, 30.0, Strategy::Random, Regime::HighSnr, trials,
                                  opt.seed, opt.threads);
      const double mc = run_point(spec).mc_mean;
      const double rel = std::abs(mc - analytic) / analytic;
      if (rel > worst) {
        worst = rel;
        worst_k = k;
      }
    }
    c.add(worst <= 0.08 * tol.stretch,
          fmt("M=%d,N=20: worst rel gap %.4f at k=%d over %d gated points (<= %.3f)", bs, worst,
              worst_k, gated, 0.08 * tol.stretch));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {3, "random-high-accuracy", c.ok, seconds, c.lines};
}

// ---------------------------------------------------------------------------
// Criterion 4: a slightly weaker base station collapses once k > M.

CriterionResult criterion_overloaded_collapse(const ValidationOptions& opt, const Tolerances& tol) {
  Checks c;
  const long trials = std::max(10000L / tol.divisor, 500L);
  const auto start = std::chrono::steady_clock::now();
  const int k = 19 + 5;
  const auto spec =
      make_spec(19, 20, k, k, 30.0, Strategy::Random, Regime::HighSnr, trials, opt.seed,
                opt.threads);
  const double mc = run_point(spec).mc_mean;
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.add(mc <= 0.05 * tol.stretch,
        fmt("M=19,N=20,k=24: mc %.5f <= %.3f nats", mc, 0.05 * tol.stretch));
  return {4, "overloaded-collapse", c.ok, seconds, c.lines};
}

// ---------------------------------------------------------------------------
// Criterion 5: low-SNR closed form and linearity in rho.

CriterionResult criterion_random_low_accuracy(const ValidationOptions& opt, const Tolerances& tol) {
  Checks c;
  const long trials = std::max(100000L / tol.divisor, 5000L);
  const auto start = std::chrono::steady_clock::now();
  const double rho = db_to_linear(-30.0);
  double mc_at_5 = 0.0;
  for (int k = 1; k <= 10; ++k) {
    const auto spec =
        make_spec(10, 10, k, k, -30.0, Strategy::Random, Regime::LowSnr, trials, opt.seed,
                  opt.threads);
    const double mc = run_point(spec).mc_mean;
    if (k == 5) mc_at_5 = mc;
    const double analytic = rho * std::sqrt(k * 10.0 / M_PI);
    const double rel = std::abs(mc - analytic) / analytic;
    c.add(rel <= 0.10 * tol.stretch, fmt("k=%d: mc %.5e vs %.5e (rel %.4f <= %.3f)", k, mc,
                                         analytic, rel, 0.10 * tol.stretch));
  }
  {
    auto half = make_spec(10, 10, 5, 5, -30.0, Strategy::Random, Regime::LowSnr, trials,
                          opt.seed, opt.threads);
    half.config.snr = rho / 2.0;
    const double mc_half = run_point(half).mc_mean;
    const double ratio = mc_half / mc_at_5;
    c.add(std::abs(ratio - 0.5) <= 0.05 * tol.stretch,
          fmt("halving rho: ratio %.4f within 0.5 +- %.3f", ratio, 0.05 * tol.stretch));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.add(seconds < 300.0, fmt("runtime %.1f s < 300 s", seconds));
  return {5, "random-low-accuracy", c.ok, seconds, c.lines};
}

// ---------------------------------------------------------------------------
// Criterion 6: sequential greedy selection at high SNR against the
// closed-form curves, both CSI cases. Greedy prefixes are reused so every k
// shares one selection pass per trial.

CriterionResult criterion_greedy_high_accuracy(const ValidationOptions& opt,
                                               const Tolerances& tol) {
  Checks c;
  const long trials = std::max(10000L / tol.divisor, 500L);
  const int k_max = 10;
  const double rho = db_to_linear(30.0);
  const auto start = std::chrono::steady_clock::now();
  for (int eve : {20, 25}) {
    SystemConfig cfg;
    cfg.bs_antennas = 20;
    cfg.eve_antennas = eve;
    cfg.total_users = 400;
    cfg.served_users = k_max;

    std::vector<std::vector<double>> main_vals(k_max, std::vector<double>(trials));
    std::vector<std::vector<double>> full_vals(k_max, std::vector<double>(trials));
    parallel_trials(trials, opt.threads, [&](long t) {
      const ChannelPair ch = sample_channel_pair(cfg, opt.seed, static_cast<std::uint64_t>(t));
      const auto greedy_m = select_greedy_main(ch.main, k_max);
      const auto greedy_f = select_greedy_full(ch.main, ch.wiretap, k_max);
      const auto rates_m = prefix_secrecy_rates(ch.main, ch.wiretap, greedy_m.indices, rho, rho);
      const auto rates_f = prefix_secrecy_rates(ch.main, ch.wiretap, greedy_f.indices, rho, rho);
      for (int k = 1; k <= k_max; ++k) {
        main_vals[k - 1][static_cast<std::size_t>(t)] = rates_m[k - 1];
        full_vals[k - 1][static_cast<std::size_t>(t)] = rates_f[k - 1];
      }
    });
    for (int k = 1; k <= k_max; ++k) {
      const double mc_main = reduce(main_vals[k - 1]).mean;
      const double mc_full = reduce(full_vals[k - 1]).mean;
      const double an_main = essr_greedy_high(20, eve, k, 400, Csi::Main).value;
      const double an_full = essr_greedy_high(20, eve, k, 400, Csi::Full).value;
      const double rel_main = std::abs(mc_main - an_main) / an_main;
      const double rel_full = std::abs(mc_full - an_full) / an_full;
      c.add(rel_main <= 0.10 * tol.stretch,
            fmt("main N=%d k=%d: mc %.4f vs %.4f (rel %.4f <= %.3f)", eve, k, mc_main, an_main,
                rel_main, 0.10 * tol.stretch));
      c.add(rel_full <= 0.10 * tol.stretch,
            fmt("full N=%d k=%d: mc %.4f vs %.4f (rel %.4f <= %.3f)", eve, k, mc_full, an_full,
                rel_full, 0.10 * tol.stretch));
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {6, "greedy-high-accuracy", c.ok, seconds, c.lines};
}

// ---------------------------------------------------------------------------
// Criterion 7: strategy ordering with paired draws, and exhaustive-search
// dominance over greedy on enumerable instances.

CriterionResult criterion_strategy_ordering(const ValidationOptions& opt, const Tolerances& tol) {
  Checks c;
  const long trials = std::max(10000L / tol.divisor, 500L);
  const double rho = db_to_linear(30.0);
  const auto start = std::chrono::steady_clock::now();
  SystemConfig cfg;
  cfg.bs_antennas = 20;
  cfg.eve_antennas = 25;
  cfg.total_users = 400;
  cfg.served_users = 5;

  std::vector<double> random_v(trials), main_v(trials), full_v(trials);
  parallel_trials(trials, opt.threads, [&](long t) {
    const ChannelPair ch = sample_channel_pair(cfg, opt.seed, static_cast<std::uint64_t>(t));
    RngStream sel_stream({opt.seed, static_cast<std::uint64_t>(t), StreamRole::Selection});
    const auto rnd = select_random(cfg.total_users, 5, sel_stream);
    const auto grm = select_greedy_main(ch.main, 5);
    const auto grf = select_greedy_full(ch.main, ch.wiretap, 5);
    random_v[static_cast<std::size_t>(t)] =
        prefix_secrecy_rates(ch.main, ch.wiretap, rnd.indices, rho, rho).back();
    main_v[static_cast<std::size_t>(t)] =
        prefix_secrecy_rates(ch.main, ch.wiretap, grm.indices, rho, rho).back();
    full_v[static_cast<std::size_t>(t)] =
        prefix_secrecy_rates(ch.main, ch.wiretap, grf.indices, rho, rho).back();
  });
  auto paired_gap = [&](const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return reduce(d);
  };
  const MeanStderr g1 = paired_gap(full_v, main_v);
  const MeanStderr g2 = paired_gap(main_v, random_v);
  c.add(g1.mean >= 3.0 * g1.stderr_,
        fmt("greedy-full over greedy-main: gap %.4f >= 3 x stderr %.5f", g1.mean, g1.stderr_));
  c.add(g2.mean >= 3.0 * g2.stderr_,
        fmt("greedy-main over random: gap %.4f >= 3 x stderr %.5f", g2.mean, g2.stderr_));

  // Exhaustive dominance on a reduced configuration.
  const long instances = std::max(200L / tol.divisor, 50L);
  SystemConfig small;
  small.bs_antennas = 5;
  small.eve_antennas = 6;
  small.total_users = 10;
  small.served_users = 3;
  long violations_main = 0, violations_full = 0;
  for (long t = 0; t < instances; ++t) {
    const ChannelPair ch =
        sample_channel_pair(small, opt.seed + 101, static_cast<std::uint64_t>(t));
    const auto grm = select_greedy_main(ch.main, 3);
    const auto grf = select_greedy_full(ch.main, ch.wiretap, 3);
    const auto exm = select_exhaustive(ch.main, ch.wiretap, 3, ExhaustiveObjective::MainRate, rho);
    const auto exf =
        select_exhaustive(ch.main, ch.wiretap, 3, ExhaustiveObjective::FullSecrecy, rho);
    auto main_objective = [&](const std::vector<int>& idx) {
      ComplexMatrix h(ch.main.rows(), 3);
      for (int i = 0; i < 3; ++i) h.col(i) = ch.main.col(idx[static_cast<std::size_t>(i)]);
      return sum_rate(h, rho);
    };
    auto full_objective = [&](const std::vector<int>& idx) {
      ComplexMatrix h(ch.main.rows(), 3), g(ch.wiretap.rows(), 3);
      for (int i = 0; i < 3; ++i) {
        h.col(i) = ch.main.col(idx[static_cast<std::size_t>(i)]);
        g.col(i) = ch.wiretap.col(idx[static_cast<std::size_t>(i)]);
      }
      return sum_rate(h, rho) - sum_rate(g, rho);
    };
    if (main_objective(exm.indices) < main_objective(grm.indices) - 1e-9) ++violations_main;
    if (full_objective(exf.indices) < full_objective(grf.indices) - 1e-9) ++violations_full;
  }
  c.add(violations_main == 0,
        fmt("exhaustive main-rate >= greedy on %ld instances (%ld violations)", instances,
            violations_main));
  c.add(violations_full == 0,
        fmt("exhaustive secrecy >= greedy on %ld instances (%ld violations)", instances,
            violations_full));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {7, "strategy-ordering", c.ok, seconds, c.lines};
}

// ---------------------------------------------------------------------------
// Criterion 8: exact algebraic identities.

CriterionResult criterion_exact_identities(const ValidationOptions& opt, const Tolerances&) {
  Checks c;
  const auto start = std::chrono::steady_clock::now();

  // Chain decomposition equals the Gram log determinant for any ordering.
  double worst_chain = 0.0;
  for (int instance = 0; instance < 1000; ++instance) {
    RngStream stream({opt.seed + 7, static_cast<std::uint64_t>(instance), StreamRole::Selection});
    const int m = 4 + static_cast<int>(stream.next() % 7);
    const int k = 1 + static_cast<int>(stream.next() % std::min(m, 5));
    const ComplexMatrix h = sample_gaussian_matrix(
        m, k, {opt.seed + 7, static_cast<std::uint64_t>(instance), StreamRole::MainChannel});
    std::vector<int> order(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) order[static_cast<std::size_t>(i)] = i;
    for (int i = k - 1; i > 0; --i)
      std::swap(order[static_cast<std::size_t>(i)],
                order[static_cast<std::size_t>(stream.next() % (i + 1))]);
    const auto steps = sic_chain_logdet(h, order);
    double total = 0.0;
    for (double s : steps) total += s;
    worst_chain = std::max(worst_chain, std::abs(total - log_det_gram(h)));
  }
  c.add(worst_chain <= 1e-9, fmt("chain-sum vs log det: worst |gap| %.2e <= 1e-9", worst_chain));

  // Complement projectors are Hermitian and idempotent.
  double worst_proj = 0.0;
  for (int instance = 0; instance < 1000; ++instance) {
    RngStream stream({opt.seed + 8, static_cast<std::uint64_t>(instance), StreamRole::Selection});
    const int m = 4 + static_cast<int>(stream.next() % 9);
    const int l = 1 + static_cast<int>(stream.next() % std::min(m - 1, 5));
    const ComplexMatrix p = sample_gaussian_matrix(
        m, l, {opt.seed + 8, static_cast<std::uint64_t>(instance), StreamRole::MainChannel});
    const ComplexMatrix a = projection_complement(p);
    worst_proj = std::max(worst_proj, (a - a.adjoint()).cwiseAbs().maxCoeff());
    worst_proj = std::max(worst_proj, (a * a - a).cwiseAbs().maxCoeff());
    worst_proj = std::max(worst_proj, (a * p).cwiseAbs().maxCoeff());
  }
  c.add(worst_proj <= 1e-10,
        fmt("projector hermitian/idempotent/annihilating: worst %.2e <= 1e-10", worst_proj));

  // Rectification keeps every instantaneous secrecy rate nonnegative.
  bool nonnegative = true;
  for (int instance = 0; instance < 1000; ++instance) {
    SystemConfig cfg;
    cfg.bs_antennas = 6;
    cfg.eve_antennas = 9;  // eavesdropper advantage on purpose
    cfg.total_users = 6;
    cfg.served_users = 4;
    cfg.snr = 100.0;
    const ChannelPair ch =
        sample_channel_pair(cfg, opt.seed + 9, static_cast<std::uint64_t>(instance));
    const auto rb = secrecy_sum_rate(ch.main.leftCols(4), ch.wiretap.leftCols(4), cfg.snr);
    nonnegative = nonnegative && rb.secrecy_rate >= 0.0;
  }
  c.add(nonnegative, "secrecy rate rectification nonnegative on adversarial instances");

  // Dual computation of the greedy low-SNR mean rate.
  double worst_dual = 0.0;
  for (int bs : {10, 20})
    for (int eve : {10, 15, 25})
      for (int total : {100, 400})
        for (int served = 1; served <= 8; ++served)
          for (Csi csi : {Csi::Main, Csi::Full}) {
            const double a = greedy_low_mean_rate(bs, eve, served, total, csi);
            const double b = greedy_low_mean_rate_by_order_stats(bs, eve, served, total, csi);
            worst_dual = std::max(worst_dual, std::abs(a - b));
          }
  c.add(worst_dual <= 1e-10, fmt("dual mean-rate routes agree: worst |gap| %.2e <= 1e-10", worst_dual));

  // Variance tail bracket.
  bool bracket = true;
  for (int m = 2; m <= 64; ++m) {
    const double tail = inverse_square_tail(m);
    bracket = bracket && tail > 1.0 / m && tail < 1.0 / (m - 1.0);
  }
  c.add(bracket, "inverse-square tail lies in (1/M, 1/(M-1)) for M in 2..64");

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {8, "exact-identities", c.ok, seconds, c.lines};
}

// ---------------------------------------------------------------------------
// Criterion 9: estimation errors always cost secrecy rate, and the zero-error
// path is bitwise identical to the perfect-CSI path.

CriterionResult criterion_estimation_error(const ValidationOptions& opt, const Tolerances& tol) {
  Checks c;
  const long trials = std::max(10000L / tol.divisor, 500L);
  const double rho = db_to_linear(-30.0);
  const double xi = 0.1;
  const double eta = snr_loss_factor(rho, xi);
  const int k_max = 8;
  const auto start = std::chrono::steady_clock::now();

  SystemConfig cfg;
  cfg.bs_antennas = 10;
  cfg.eve_antennas = 15;
  cfg.total_users = 400;
  cfg.served_users = k_max;

  std::vector<std::vector<double>> perfect(k_max, std::vector<double>(trials));
  std::vector<std::vector<double>> corrupted(k_max, std::vector<double>(trials));
  parallel_trials(trials, opt.threads, [&](long t) {
    // The same draw serves as the perfect channel and as the estimate.
    const ChannelPair ch = sample_channel_pair(cfg, opt.seed, static_cast<std::uint64_t>(t));
    const auto order = select_norm_based(ch.main, k_max);
    const auto clean = prefix_secrecy_rates(ch.main, ch.wiretap, order.indices, rho, rho);
    const auto noisy =
        prefix_secrecy_rates(ch.main, ch.wiretap, order.indices, eta * rho, rho);
    for (int k = 1; k <= k_max; ++k) {
      perfect[k - 1][static_cast<std::size_t>(t)] = clean[k - 1];
      corrupted[k - 1][static_cast<std::size_t>(t)] = noisy[k - 1];
    }
  });
  for (int k = 1; k <= k_max; ++k) {
    const MeanStderr p = reduce(perfect[k - 1]);
    const MeanStderr q = reduce(corrupted[k - 1]);
    const double spread = std::sqrt(p.stderr_ * p.stderr_ + q.stderr_ * q.stderr_);
    c.add(p.mean - q.mean >= 2.0 * spread,
          fmt("k=%d: perfect %.5e vs corrupted %.5e (gap >= 2 x stderr %.2e)", k, p.mean, q.mean,
              spread));
  }

  // Zero error variance must reproduce the perfect-CSI numbers bit for bit.
  bool bitwise = true;
  for (long t = 0; t < std::min<long>(trials, 64); ++t) {
    const ChannelPair ch = sample_channel_pair(cfg, opt.seed, static_cast<std::uint64_t>(t));
    const auto order = select_norm_based(ch.main, k_max);
    ComplexMatrix h(cfg.bs_antennas, k_max);
    for (int i = 0; i < k_max; ++i) h.col(i) = ch.main.col(order.indices[static_cast<std::size_t>(i)]);
    bitwise = bitwise && lower_bound_sum_rate(h, rho, 0.0) == sum_rate(h, rho);
    const auto estimated = corrupt_estimate(
        ch.main, 0.0, {opt.seed, static_cast<std::uint64_t>(t), StreamRole::EstimationError});
    bitwise = bitwise && estimated.realized == estimated.estimate;
  }
  c.add(bitwise, "zero-error path bitwise equals perfect-CSI path");

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {9, "estimation-error-degradation", c.ok, seconds, c.lines};
}

// ---------------------------------------------------------------------------
// Criterion 10: with very large arrays, norm-driven selection tracks the
// sequential greedy schemes and the hardened closed form.

CriterionResult criterion_large_scale(const ValidationOptions& opt, const Tolerances& tol) {
  Checks c;
  const long trials = std::max(2000L / tol.divisor, 200L);
  const double rho = db_to_linear(10.0);
  const int k_max = 8;
  const auto start = std::chrono::steady_clock::now();

  SystemConfig cfg;
  cfg.bs_antennas = 100;
  cfg.eve_antennas = 100;
  cfg.total_users = 400;
  cfg.served_users = k_max;

  enum { NormMain, GreedyMainIdx, NormFull, GreedyFullIdx, Count };
  std::vector<std::vector<std::vector<double>>> vals(
      Count, std::vector<std::vector<double>>(k_max, std::vector<double>(trials)));
  parallel_trials(trials, opt.threads, [&](long t) {
    const ChannelPair ch = sample_channel_pair(cfg, opt.seed, static_cast<std::uint64_t>(t));
    const std::vector<int>* orders[Count];
    const auto o0 = select_norm_based(ch.main, k_max);
    const auto o1 = select_greedy_main(ch.main, k_max);
    const auto o2 = select_norm_diff(ch.main, ch.wiretap, k_max);
    const auto o3 = select_greedy_full(ch.main, ch.wiretap, k_max);
    orders[NormMain] = &o0.indices;
    orders[GreedyMainIdx] = &o1.indices;
    orders[NormFull] = &o2.indices;
    orders[GreedyFullIdx] = &o3.indices;
    for (int s = 0; s < Count; ++s) {
      const auto rates = prefix_secrecy_rates(ch.main, ch.wiretap, *orders[s], rho, rho);
      for (int k = 1; k <= k_max; ++k)
        vals[static_cast<std::size_t>(s)][k - 1][static_cast<std::size_t>(t)] = rates[k - 1];
    }
  });

  for (int k = 1; k <= k_max; ++k) {
    const double norm_m = reduce(vals[NormMain][k - 1]).mean;
    const double gre_m = reduce(vals[GreedyMainIdx][k - 1]).mean;
    const double norm_f = reduce(vals[NormFull][k - 1]).mean;
    const double gre_f = reduce(vals[GreedyFullIdx][k - 1]).mean;
    const double t6_m = essr_greedy_large(100, 100, k, 400, rho, Csi::Main).value;
    const double t6_f = essr_greedy_large(100, 100, k, 400, rho, Csi::Full).value;
    const double near_m = std::abs(norm_m - gre_m) / gre_m;
    const double near_f = std::abs(norm_f - gre_f) / gre_f;
    c.add(near_m <= 0.10 * tol.stretch,
          fmt("k=%d main: norm %.4f vs greedy %.4f (rel %.4f <= %.3f)", k, norm_m, gre_m, near_m,
              0.10 * tol.stretch));
    c.add(near_f <= 0.10 * tol.stretch,
          fmt("k=%d full: norm %.4f vs greedy %.4f (rel %.4f <= %.3f)", k, norm_f, gre_f, near_f,
              0.10 * tol.stretch));
    for (const auto& [label, mc, closed] :
         {std::tuple<const char*, double, double>{"norm-main", norm_m, t6_m},
          {"greedy-main", gre_m, t6_m},
          {"norm-full", norm_f, t6_f},
          {"greedy-full", gre_f, t6_f}}) {
      const double rel = std::abs(mc - closed) / closed;
      c.add(rel <= 0.15 * tol.stretch, fmt("k=%d %s: mc %.4f vs closed form %.4f (rel %.4f <= %.3f)",
                                           k, label, mc, closed, rel, 0.15 * tol.stretch));
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {10, "large-scale-norm-selection", c.ok, seconds, c.lines};
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(const ValidationOptions& options,
                                                  std::ostream& log) {
  Tolerances tol;
  if (options.quick) {
    tol.divisor = 10;
    tol.stretch = 2.0;
  }
  using CriterionFn = CriterionResult (*)(const ValidationOptions&, const Tolerances&);
  const std::pair<int, CriterionFn> table[] = {
      {1, criterion_energy_table},        {2, criterion_equal_antenna_peak},
      {3, criterion_random_high_accuracy},{4, criterion_overloaded_collapse},
      {5, criterion_random_low_accuracy}, {6, criterion_greedy_high_accuracy},
      {7, criterion_strategy_ordering},   {8, criterion_exact_identities},
      {9, criterion_estimation_error},    {10, criterion_large_scale},
  };
  std::vector<CriterionResult> results;
  for (const auto& [id, fn] : table) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), id) == options.only.end())
      continue;
    CriterionResult result = fn(options, tol);
    if (options.verbose)
      for (const auto& line : result.details) log << "    " << line << "\n";
    log << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << " " << result.name << " ("
        << fmt("%.1f", result.seconds) << " s)\n";
    log.flush();
    results.push_back(std::move(result));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace secrecy
