#pragma once

#include <complex>
#include <cstdint>

namespace secrecy {

// Purpose of a random stream within one trial. Streams with different roles
// are statistically independent even under the same (seed, trial) pair.
enum class StreamRole : std::uint64_t {
  MainChannel = 1,       // user -> base-station channel entries
  WiretapChannel = 2,    // user -> eavesdropper channel entries
  EstimationError = 3,   // additive estimation-error entries
  Selection = 4,         // randomness consumed by user-selection policies
};

struct StreamKey {
  std::uint64_t master_seed = 1;
  std::uint64_t trial = 0;
  StreamRole role = StreamRole::MainChannel;
};

// Counter-keyed pseudo-random stream (xoshiro256++ seeded via splitmix64).
// Every (key, lane) pair yields an independent, reproducible sequence, so
// trial results do not depend on scheduling or thread count. Lanes are used
// for per-column sub-streams of sampled matrices.
class RngStream {
 public:
  explicit RngStream(const StreamKey& key, std::uint64_t lane = 0);

  std::uint64_t next();

  // Uniform on [0, 1).
  double uniform01();

  // Standard normal via the polar method; the second deviate of each
  // generated pair is cached.
  double normal();

  // Circularly-symmetric complex Gaussian with unit variance:
  // real and imaginary parts each N(0, 1/2).
  std::complex<double> complex_gaussian();

 private:
  std::uint64_t state_[4];
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace secrecy
