#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>

#include "secrecy/rng.hpp"

namespace secrecy {

using ComplexMatrix = Eigen::MatrixXcd;

// Scenario parameters for one uplink configuration.
struct SystemConfig {
  int bs_antennas = 10;        // receive antennas at the base station
  int eve_antennas = 10;       // receive antennas at the eavesdropper
  int total_users = 1;         // users in the cell
  int served_users = 1;        // users scheduled per slot
  double snr = 1.0;            // linear transmit SNR (power over noise)
  double error_variance = 0.0; // channel-estimation error variance, in [0, 1)

  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  // The Gaussian capacity approximation is calibrated for receivers with at
  // least ~10 antennas; below that the closed forms should be treated as
  // indicative only.
  bool gaussian_approx_reliable() const {
    return bs_antennas >= 10 && eve_antennas >= 10;
  }
};

struct ChannelPair {
  ComplexMatrix main;     // bs_antennas x total_users
  ComplexMatrix wiretap;  // eve_antennas x total_users
};

// MMSE estimation-error model: realized = sqrt(1-xi)*estimate + sqrt(xi)*error
// with estimate and error independent unit-variance complex Gaussians.
struct EstimatedChannel {
  ComplexMatrix estimate;
  ComplexMatrix realized;
  double error_variance = 0.0;
};

// i.i.d. CN(0,1) entries; column j is drawn from sub-stream lane j of `key`,
// so sampling a column subset commutes with sampling the full matrix.
ComplexMatrix sample_gaussian_matrix(int rows, int cols, const StreamKey& key);

// Single column of the matrix sample_gaussian_matrix(rows, *, key) would
// produce at index `col` (bit-identical).
Eigen::VectorXcd sample_gaussian_column(int rows, const StreamKey& key, int col);

// Independent main and wiretap channels for one trial.
ChannelPair sample_channel_pair(const SystemConfig& cfg, std::uint64_t master_seed,
                                std::uint64_t trial);

// Applies the estimation-error model to an estimate, drawing the error term
// from `error_key`.
EstimatedChannel corrupt_estimate(const ComplexMatrix& estimate, double xi,
                                  const StreamKey& error_key);

// Effective SNR multiplier (1-xi)/(1+xi*rho) caused by estimation errors.
double snr_loss_factor(double rho, double xi);

// Binary fixture format: rows and cols as little-endian uint64, then
// row-major interleaved real/imag little-endian doubles.
void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m);
ComplexMatrix load_matrix(const std::filesystem::path& path);

}  // namespace secrecy
