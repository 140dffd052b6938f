#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "secrecy/analytic.hpp"
#include "secrecy/channel.hpp"
#include "secrecy/selection.hpp"

namespace secrecy {

struct ExperimentSpec {
  SystemConfig config;
  Strategy strategy = Strategy::Random;
  Regime regime = Regime::HighSnr;
  long trials = 10000;
  std::uint64_t master_seed = 1;
  int threads = 0;  // 0 = all hardware threads; never affects results
  std::uint64_t exhaustive_budget = 1000000;
  // Diagnostic hook: reuse the main-channel draw for the wiretap channel
  // (requires equal antenna counts). Forces a zero secrecy rate.
  bool force_equal_channels = false;
};

struct EssrEstimate {
  double mc_mean = 0.0;    // nats, rectified-then-averaged
  double mc_stderr = 0.0;  // sample std / sqrt(trials)
  double analytic = 0.0;   // matching closed form; NaN when none applies
  long trials = 0;
  double point = 0.0;      // sweep-axis value, if part of a sweep
  // Mean-then-rectify diagnostic; a lower bound that collapses to zero
  // whenever the eavesdropper out-rates the base station on average.
  double jensen = 0.0;
};

// The closed form paired with (strategy, regime, xi); NaN when the inputs
// fall outside every formula's domain.
double analytic_prediction(const ExperimentSpec& spec);

// Secrecy rate of one trial (used by the experiment runners and exposed for
// paired-comparison studies that share channel draws across strategies).
double secrecy_rate_for_trial(const ExperimentSpec& spec, const ChannelPair& channels,
                              std::uint64_t trial, double* unrectified = nullptr);

// Runs spec.trials independent seeded trials; deterministic for fixed
// (spec, master_seed) regardless of thread count.
EssrEstimate run_point(const ExperimentSpec& spec);

// One row of the strongest-channel-energy comparison table.
struct EnergyTableRow {
  int degrees = 0;         // per-entry chi-square half-degrees (antenna count)
  double numerical = 0.0;  // Monte Carlo E[max_j ||h_j||^2]
  double analytical = 0.0; // Gaussian-based asymptotic mean
  double gumbel_ref = 0.0; // classical chi-square Gumbel location
};

std::vector<EnergyTableRow> run_energy_table(int total_users, const std::vector<int>& degrees,
                                             long trials, std::uint64_t master_seed,
                                             int threads);

enum class SweepAxis { ServedUsers, TotalUsers, EveAntennas, SnrDb };

const char* sweep_axis_name(SweepAxis axis);

struct DatasetRow {
  std::string series;
  double point = 0.0;
  double mc_mean = 0.0;
  double mc_stderr = 0.0;
  double analytic = 0.0;
  long trials = 0;
  double jensen = 0.0;
};

struct Dataset {
  std::string meta_json;  // fully-resolved experiment description
  std::vector<DatasetRow> rows;
};

// Applies `axis = value` to a copy of the base spec. Sweeping served users
// above the configured total raises the total to match.
ExperimentSpec apply_axis(const ExperimentSpec& base, SweepAxis axis, double value);

Dataset run_sweep(const ExperimentSpec& base, SweepAxis axis, const std::vector<double>& values,
                  const std::string& series);

// Parallel map over trial indices with a deterministic ordered reduction.
void parallel_trials(long trials, int threads, const std::function<void(long)>& body);

std::string experiment_meta_json(const ExperimentSpec& spec, SweepAxis axis,
                                 const std::vector<double>& values);

}  // namespace secrecy
