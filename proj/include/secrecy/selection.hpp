#pragma once

#include <cstdint>
#include <vector>

#include "secrecy/channel.hpp"
#include "secrecy/rng.hpp"

namespace secrecy {

enum class Strategy {
  Random,
  GreedyMain,      // sequential argmax of the projected main-channel gain
  GreedyFull,      // sequential argmax of the main/wiretap projected-gain ratio
  NormBased,       // top-k squared column norms of the main channel
  NormDiff,        // top-k of main-norm minus wiretap-norm
  ExhaustiveMain,  // subset maximizing the base-station sum-rate
  ExhaustiveFull,  // subset maximizing the secrecy sum-rate
};

const char* strategy_name(Strategy s);

struct SelectionOutcome {
  std::vector<int> indices;          // selected users, selection order, no duplicates
  std::vector<double> step_metrics;  // maximized metric per step (greedy/norm)
  Strategy strategy = Strategy::Random;
};

// Uniformly random subset of `count` users out of `total`.
SelectionOutcome select_random(int total, int count, RngStream& stream);

// Greedy sequential selection on the main channel: each step takes the user
// with the largest channel energy outside the span of those already chosen.
// Ties break toward the lowest index. Requires count <= min(rows, cols).
SelectionOutcome select_greedy_main(const ComplexMatrix& main, int count);

// Same schedule driven by an estimated channel: the complement projector is
// replaced by its MMSE-regularized form at the given effective SNR, which
// recovers select_greedy_main as effective_snr -> infinity.
SelectionOutcome select_greedy_main_regularized(const ComplexMatrix& estimate, int count,
                                                double effective_snr);

// Greedy sequential selection with both channels known: each step maximizes
// the ratio of projected main gain to projected wiretap gain.
SelectionOutcome select_greedy_full(const ComplexMatrix& main, const ComplexMatrix& wiretap,
                                    int count);

// Top-count users by squared main-channel norm, descending.
SelectionOutcome select_norm_based(const ComplexMatrix& main, int count);

// Top-count users by (main norm^2 - wiretap norm^2), descending.
SelectionOutcome select_norm_diff(const ComplexMatrix& main, const ComplexMatrix& wiretap,
                                  int count);

enum class ExhaustiveObjective {
  MainRate,     // maximize log det(I + rho H^H H)
  FullSecrecy,  // maximize the log-determinant ratio of main to wiretap
};

// Enumerates every subset (lexicographic order, first strict improvement
// wins, so ties resolve to the lowest lexicographic subset). Refuses when the
// number of subsets exceeds `subset_budget`.
SelectionOutcome select_exhaustive(const ComplexMatrix& main, const ComplexMatrix& wiretap,
                                   int count, ExhaustiveObjective objective, double rho,
                                   std::uint64_t subset_budget = 1000000);

}  // namespace secrecy
