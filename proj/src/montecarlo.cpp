#include "secrecy/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "secrecy/rates.hpp"
#include "secrecy/special_math.hpp"

namespace secrecy {

namespace {

using nlohmann::json;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

ComplexMatrix take_columns(const ComplexMatrix& m, const std::vector<int>& indices) {
  ComplexMatrix out(m.rows(), static_cast<Eigen::Index>(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = m.col(indices[i]);
  return out;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

SelectionOutcome select_users(const ExperimentSpec& spec, const ChannelPair& channels,
                              std::uint64_t trial) {
  const SystemConfig& cfg = spec.config;
  const int k = cfg.served_users;
  const double xi = cfg.error_variance;
  switch (spec.strategy) {
    case Strategy::Random: {
      RngStream stream({spec.master_seed, trial, StreamRole::Selection});
      return select_random(cfg.total_users, k, stream);
    }
    case Strategy::NormBased:
      return select_norm_based(channels.main, k);
    case Strategy::NormDiff:
      return select_norm_diff(channels.main, channels.wiretap, k);
    case Strategy::GreedyMain:
      // In the low-SNR regime the greedy schedule degenerates to picking the
      // strongest channels; elsewhere it is the sequential projection rule.
      if (spec.regime == Regime::LowSnr) return select_norm_based(channels.main, k);
      if (xi > 0.0)
        return select_greedy_main_regularized(channels.main, k,
                                              snr_loss_factor(cfg.snr, xi) * cfg.snr);
      return select_greedy_main(channels.main, k);
    case Strategy::GreedyFull:
      if (spec.regime == Regime::LowSnr)
        return select_norm_diff(channels.main, channels.wiretap, k);
      return select_greedy_full(channels.main, channels.wiretap, k);
    case Strategy::ExhaustiveMain:
      return select_exhaustive(channels.main, channels.wiretap, k,
                               ExhaustiveObjective::MainRate, cfg.snr, spec.exhaustive_budget);
    case Strategy::ExhaustiveFull:
      return select_exhaustive(channels.main, channels.wiretap, k,
                               ExhaustiveObjective::FullSecrecy, cfg.snr, spec.exhaustive_budget);
  }
  throw std::logic_error("select_users: unhandled strategy");
}

}  // namespace

double analytic_prediction(const ExperimentSpec& spec) {
  const SystemConfig& c = spec.config;
  const bool main_csi =
      spec.strategy == Strategy::GreedyMain || spec.strategy == Strategy::NormBased;
  const bool full_csi =
      spec.strategy == Strategy::GreedyFull || spec.strategy == Strategy::NormDiff;
  const Csi csi = full_csi ? Csi::Full : Csi::Main;
  try {
    switch (spec.strategy) {
      case Strategy::Random:
        if (spec.regime == Regime::HighSnr && c.error_variance == 0.0)
          return essr_random_high(c.bs_antennas, c.eve_antennas, c.served_users, c.snr).value;
        if (spec.regime == Regime::LowSnr)
          return c.error_variance == 0.0
                     ? essr_random_low(c.bs_antennas, c.eve_antennas, c.served_users, c.snr).value
                     : essr_error_random_low(c.bs_antennas, c.eve_antennas, c.served_users,
                                             c.snr, c.error_variance).value;
        if (spec.regime == Regime::LargeScale && c.error_variance == 0.0)
          return essr_random_large(c.bs_antennas, c.eve_antennas, c.served_users, c.snr).value;
        return kNan;
      case Strategy::GreedyMain:
      case Strategy::NormBased:
      case Strategy::GreedyFull:
      case Strategy::NormDiff:
        if (spec.regime == Regime::HighSnr && c.error_variance == 0.0)
          return essr_greedy_high(c.bs_antennas, c.eve_antennas, c.served_users, c.total_users,
                                  csi).value;
        if (spec.regime == Regime::LowSnr) {
          if (c.error_variance == 0.0)
            return essr_greedy_low(c.bs_antennas, c.eve_antennas, c.served_users, c.total_users,
                                   c.snr, csi).value;
          if (main_csi)
            return essr_error_greedy_low(c.bs_antennas, c.eve_antennas, c.served_users,
                                         c.total_users, c.snr, c.error_variance).value;
          return kNan;
        }
        if (spec.regime == Regime::LargeScale && c.error_variance == 0.0)
          return essr_greedy_large(c.bs_antennas, c.eve_antennas, c.served_users, c.total_users,
                                   c.snr, csi).value;
        return kNan;
      case Strategy::ExhaustiveMain:
      case Strategy::ExhaustiveFull:
        return kNan;
    }
  } catch (const std::domain_error&) {
    return kNan;
  }
  return kNan;
}

double secrecy_rate_for_trial(const ExperimentSpec& spec, const ChannelPair& channels,
                              std::uint64_t trial, double* unrectified) {
  const SystemConfig& cfg = spec.config;
  const SelectionOutcome sel = select_users(spec, channels, trial);
  const ComplexMatrix served_main = take_columns(channels.main, sel.indices);
  const ComplexMatrix served_tap = take_columns(channels.wiretap, sel.indices);
  const double bs_rate = cfg.error_variance > 0.0
                             ? lower_bound_sum_rate(served_main, cfg.snr, cfg.error_variance)
                             : sum_rate(served_main, cfg.snr);
  const double eve_rate = sum_rate(served_tap, cfg.snr);
  if (unrectified != nullptr) *unrectified = bs_rate - eve_rate;
  return std::max(bs_rate - eve_rate, 0.0);
}

void parallel_trials(long trials, int threads, const std::function<void(long)>& body) {
  const int workers = std::min<long>(resolve_threads(threads), std::max(trials, 1L));
  if (workers <= 1) {
    for (long t = 0; t < trials; ++t) body(t);
    return;
  }
  std::mutex error_mutex;
  std::exception_ptr first_error;
  const long chunk = (trials + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const long begin = w * chunk;
    const long end = std::min(trials, begin + chunk);
    pool.emplace_back([&, begin, end] {
      try {
        for (long t = begin; t < end; ++t) body(t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

EssrEstimate run_point(const ExperimentSpec& spec) {
  spec.config.validate();
  if (spec.trials < 1) throw std::invalid_argument("trials: must be >= 1");
  if (spec.force_equal_channels && spec.config.bs_antennas != spec.config.eve_antennas)
    throw std::invalid_argument("force_equal_channels requires M == N");

  std::vector<double> rectified(static_cast<std::size_t>(spec.trials));
  std::vector<double> raw(static_cast<std::size_t>(spec.trials));
  parallel_trials(spec.trials, spec.threads, [&](long t) {
    ChannelPair channels =
        sample_channel_pair(spec.config, spec.master_seed, static_cast<std::uint64_t>(t));
    if (spec.force_equal_channels) channels.wiretap = channels.main;
    double unrectified = 0.0;
    rectified[static_cast<std::size_t>(t)] =
        secrecy_rate_for_trial(spec, channels, static_cast<std::uint64_t>(t), &unrectified);
    raw[static_cast<std::size_t>(t)] = unrectified;
  });

  // Ordered two-pass reduction: identical result for any thread count.
  double sum = 0.0, raw_sum = 0.0;
  for (long t = 0; t < spec.trials; ++t) {
    sum += rectified[static_cast<std::size_t>(t)];
    raw_sum += raw[static_cast<std::size_t>(t)];
  }
  const double mean = sum / spec.trials;
  double ss = 0.0;
  for (long t = 0; t < spec.trials; ++t) {
    const double d = rectified[static_cast<std::size_t>(t)] - mean;
    ss += d * d;
  }
  EssrEstimate est;
  est.mc_mean = mean;
  est.mc_stderr = spec.trials > 1 ? std::sqrt(ss / (spec.trials - 1) / spec.trials) : 0.0;
  est.analytic = analytic_prediction(spec);
  est.trials = spec.trials;
  est.jensen = std::max(raw_sum / spec.trials, 0.0);
  return est;
}

std::vector<EnergyTableRow> run_energy_table(int total_users, const std::vector<int>& degrees,
                                             long trials, std::uint64_t master_seed,
                                             int threads) {
  if (total_users < 2) throw std::invalid_argument("K: total users must be >= 2");
  if (trials < 1) throw std::invalid_argument("trials: must be >= 1");
  std::vector<EnergyTableRow> rows;
  rows.reserve(degrees.size());
  for (int m : degrees) {
    if (m < 1) throw std::invalid_argument("M: antenna count must be >= 1");
    const std::uint64_t row_seed = mix_seed(master_seed, static_cast<std::uint64_t>(m));
    std::vector<double> best(static_cast<std::size_t>(trials));
    parallel_trials(trials, threads, [&](long t) {
      const ComplexMatrix h = sample_gaussian_matrix(
          m, total_users, {row_seed, static_cast<std::uint64_t>(t), StreamRole::MainChannel});
      double top = 0.0;
      for (Eigen::Index j = 0; j < h.cols(); ++j) top = std::max(top, h.col(j).squaredNorm());
      best[static_cast<std::size_t>(t)] = top;
    });
    double sum = 0.0;
    for (double v : best) sum += v;
    EnergyTableRow row;
    row.degrees = m;
    row.numerical = sum / trials;
    row.analytical = max_order_mean(total_users, m, std::sqrt(static_cast<double>(m)));
    const double log_k = std::log(static_cast<double>(total_users));
    row.gumbel_ref = log_k + (m - 1) * std::log(log_k);
    rows.push_back(row);
  }
  return rows;
}

const char* sweep_axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::ServedUsers: return "k";
    case SweepAxis::TotalUsers: return "K";
    case SweepAxis::EveAntennas: return "N";
    case SweepAxis::SnrDb: return "snr_db";
  }
  return "unknown";
}

ExperimentSpec apply_axis(const ExperimentSpec& base, SweepAxis axis, double value) {
  ExperimentSpec spec = base;
  switch (axis) {
    case SweepAxis::ServedUsers:
      spec.config.served_users = static_cast<int>(value);
      spec.config.total_users = std::max(spec.config.total_users, spec.config.served_users);
      break;
    case SweepAxis::TotalUsers:
      spec.config.total_users = static_cast<int>(value);
      break;
    case SweepAxis::EveAntennas:
      spec.config.eve_antennas = static_cast<int>(value);
      break;
    case SweepAxis::SnrDb:
      spec.config.snr = std::pow(10.0, value / 10.0);
      break;
  }
  return spec;
}

std::string experiment_meta_json(const ExperimentSpec& spec, SweepAxis axis,
                                 const std::vector<double>& values) {
  json meta;
  meta["M"] = spec.config.bs_antennas;
  meta["N"] = spec.config.eve_antennas;
  meta["K"] = spec.config.total_users;
  meta["k"] = spec.config.served_users;
  meta["snr_linear"] = spec.config.snr;
  meta["snr_db"] = 10.0 * std::log10(spec.config.snr);
  meta["xi"] = spec.config.error_variance;
  meta["strategy"] = strategy_name(spec.strategy);
  meta["regime"] = regime_name(spec.regime);
  meta["trials"] = spec.trials;
  meta["seed"] = spec.master_seed;
  if (!values.empty()) {
    meta["sweep_axis"] = sweep_axis_name(axis);
    meta["sweep_values"] = values;
  }
  return meta.dump();
}

Dataset run_sweep(const ExperimentSpec& base, SweepAxis axis, const std::vector<double>& values,
                  const std::string& series) {
  Dataset data;
  data.meta_json = experiment_meta_json(base, axis, values);
  for (double value : values) {
    const ExperimentSpec spec = apply_axis(base, axis, value);
    EssrEstimate est = run_point(spec);
    DatasetRow row;
    row.series = series;
    row.point = value;
    row.mc_mean = est.mc_mean;
    row.mc_stderr = est.mc_stderr;
    row.analytic = est.analytic;
    row.trials = est.trials;
    row.jensen = est.jensen;
    data.rows.push_back(std::move(row));
  }
  return data;
}

}  // namespace secrecy
