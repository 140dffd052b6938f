#include "secrecy/channel.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

namespace secrecy {

void SystemConfig::validate() const {
  if (bs_antennas < 1) throw std::invalid_argument("M: base-station antenna count must be >= 1");
  if (eve_antennas < 1) throw std::invalid_argument("N: eavesdropper antenna count must be >= 1");
  if (total_users < 1) throw std::invalid_argument("K: total user count must be >= 1");
  if (served_users < 1) throw std::invalid_argument("k: served user count must be >= 1");
  if (served_users > total_users) throw std::invalid_argument("k: served users exceed total users K");
  if (!(snr > 0.0)) throw std::invalid_argument("snr: linear SNR must be > 0");
  if (!(error_variance >= 0.0) || error_variance >= 1.0)
    throw std::invalid_argument("xi: estimation-error variance must lie in [0, 1)");
}

ComplexMatrix sample_gaussian_matrix(int rows, int cols, const StreamKey& key) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("sample_gaussian_matrix: negative dimension");
  ComplexMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    RngStream lane(key, static_cast<std::uint64_t>(j));
    for (int i = 0; i < rows; ++i) m(i, j) = lane.complex_gaussian();
  }
  return m;
}

Eigen::VectorXcd sample_gaussian_column(int rows, const StreamKey& key, int col) {
  RngStream lane(key, static_cast<std::uint64_t>(col));
  Eigen::VectorXcd v(rows);
  for (int i = 0; i < rows; ++i) v(i) = lane.complex_gaussian();
  return v;
}

ChannelPair sample_channel_pair(const SystemConfig& cfg, std::uint64_t master_seed,
                                std::uint64_t trial) {
  cfg.validate();
  ChannelPair pair;
  pair.main = sample_gaussian_matrix(cfg.bs_antennas, cfg.total_users,
                                     {master_seed, trial, StreamRole::MainChannel});
  pair.wiretap = sample_gaussian_matrix(cfg.eve_antennas, cfg.total_users,
                                        {master_seed, trial, StreamRole::WiretapChannel});
  return pair;
}

EstimatedChannel corrupt_estimate(const ComplexMatrix& estimate, double xi,
                                  const StreamKey& error_key) {
  if (!(xi >= 0.0) || xi >= 1.0)
    throw std::domain_error("xi: estimation-error variance must lie in [0, 1)");
  EstimatedChannel out;
  out.estimate = estimate;
  out.error_variance = xi;
  if (xi == 0.0) {
    out.realized = estimate;
    return out;
  }
  const ComplexMatrix error = sample_gaussian_matrix(
      static_cast<int>(estimate.rows()), static_cast<int>(estimate.cols()), error_key);
  out.realized = std::sqrt(1.0 - xi) * estimate + std::sqrt(xi) * error;
  return out;
}

double snr_loss_factor(double rho, double xi) {
  if (!(rho > 0.0)) throw std::domain_error("snr_loss_factor: rho must be > 0");
  if (!(xi >= 0.0) || xi >= 1.0) throw std::domain_error("snr_loss_factor: xi must lie in [0, 1)");
  return (1.0 - xi) / (1.0 + xi * rho);
}

namespace {

void put_u64_le(std::ofstream& os, std::uint64_t v) {
  unsigned char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
  os.write(reinterpret_cast<const char*>(buf), 8);
}

std::uint64_t get_u64_le(std::ifstream& is) {
  unsigned char buf[8];
  is.read(reinterpret_cast<char*>(buf), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  return v;
}

void put_f64_le(std::ofstream& os, double d) {
  put_u64_le(os, std::bit_cast<std::uint64_t>(d));
}

double get_f64_le(std::ifstream& is) { return std::bit_cast<double>(get_u64_le(is)); }

}  // namespace

void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("save_matrix: cannot open " + path.string());
  put_u64_le(os, static_cast<std::uint64_t>(m.rows()));
  put_u64_le(os, static_cast<std::uint64_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      put_f64_le(os, m(i, j).real());
      put_f64_le(os, m(i, j).imag());
    }
  if (!os) throw std::runtime_error("save_matrix: write failed for " + path.string());
}

ComplexMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("load_matrix: cannot open " + path.string());
  const std::uint64_t rows = get_u64_le(is);
  const std::uint64_t cols = get_u64_le(is);
  if (!is || rows > (1u << 20) || cols > (1u << 20))
    throw std::runtime_error("load_matrix: corrupt header in " + path.string());
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double re = get_f64_le(is);
      const double im = get_f64_le(is);
      m(i, j) = {re, im};
    }
  if (!is) throw std::runtime_error("load_matrix: truncated payload in " + path.string());
  return m;
}

}  // namespace secrecy
