#pragma once

#include <optional>
#include <vector>

#include "secrecy/montecarlo.hpp"

namespace secrecy {

// Optional parameter overrides for the canned figure recipes. Absent fields
// keep each figure's published defaults.
struct FigureOverrides {
  std::optional<long> trials;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::optional<int> bs_antennas;
  std::optional<int> eve_antennas;
  std::optional<int> total_users;
  std::optional<double> snr_db;
  std::optional<double> error_variance;
  // Figure 6 only: eavesdropper antenna surpluses (N - M) to plot.
  std::optional<std::vector<int>> antenna_surplus;
};

// Reproduces the data behind one of the nine study figures:
//  1  random scheduling vs k, high SNR, M = N+1 / N / N-1
//  2  random scheduling vs k, low SNR
//  3  greedy selection vs k, high SNR, both CSI cases
//  4  greedy selection vs k, low SNR, both CSI cases
//  5  large arrays: norm-based vs sequential greedy selection
//  6  random vs greedy selection, high SNR, growing eavesdropper surplus
//  7  low SNR with channel-estimation errors
//  8  greedy selection vs number of users K, high SNR
//  9  selection schemes vs eavesdropper antennas N, high SNR
Dataset run_figure(int figure_id, const FigureOverrides& overrides = {});

}  // namespace secrecy
