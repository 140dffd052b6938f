#include "secrecy/rng.hpp"

#include <cmath>

namespace secrecy {

namespace {

std::uint64_t avalanche(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RngStream::RngStream(const StreamKey& key, std::uint64_t lane) {
  // Every key component passes through a full avalanche before the next one
  // is absorbed; plain xor/add chaining would let distinct (role, lane)
  // pairs collide and correlate the channel matrices.
  std::uint64_t x = avalanche(key.master_seed + 0x9E3779B97F4A7C15ULL);
  x = avalanche(x ^ (key.trial + 0xA0761D6478BD642FULL));
  x = avalanche(x ^ (static_cast<std::uint64_t>(key.role) + 0xE7037ED1A0B428DBULL));
  x = avalanche(x ^ (lane + 0x8EBC6AF09C88C6E3ULL));
  for (auto& word : state_) {
    x += 0x9E3779B97F4A7C15ULL;
    word = avalanche(x);
  }
}

std::uint64_t RngStream::next() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RngStream::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  cached_normal_ = v * scale;
  has_cached_normal_ = true;
  return u * scale;
}

std::complex<double> RngStream::complex_gaussian() {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  const double re = normal();
  const double im = normal();
  return {re * inv_sqrt2, im * inv_sqrt2};
}

}  // namespace secrecy
