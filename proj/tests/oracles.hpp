// Test-only reference computations, kept independent of the library paths
// they are used to check.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

namespace oracle {

// Error function by composite Simpson quadrature of exp(-t^2) in long
// double; absolute accuracy well below 1e-13 on |x| <= 6.
inline double erf_quadrature(double x) {
  if (x < 0.0) return -erf_quadrature(-x);
  if (x > 6.5) return 1.0;
  const int panels = 4000;
  const long double h = static_cast<long double>(x) / panels;
  long double acc = 0.0L;
  auto f = [](long double t) { return expl(-t * t); };
  for (int i = 0; i < panels; ++i) {
    const long double a = i * h;
    acc += f(a) + 4.0L * f(a + h / 2) + f(a + h);
  }
  acc *= h / 6.0L;
  return static_cast<double>(acc * 2.0L / sqrtl(3.14159265358979323846264338327950288L));
}

// Harmonic number in long double, summed from the small end.
inline double harmonic_ld(int n) {
  long double h = 0.0L;
  for (int j = n; j >= 1; --j) h += 1.0L / j;
  return static_cast<double>(h);
}

// splitmix64 reference used to seed the test-side sampling streams.
inline std::uint64_t mix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Small standalone normal sampler (xorshift + Box-Muller), independent of
// the library generator; good enough for sampling-based cross-checks.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : state_(seed ^ 0x1234567890ABCDEFULL) {
    mix64(state_);
  }

  double operator()() {
    if (have_) {
      have_ = false;
      return spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    have_ = true;
    return r * std::cos(a);
  }

 private:
  double next_uniform() { return static_cast<double>(mix64(state_) >> 11) * 0x1.0p-53; }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_ = false;
};

}  // namespace oracle
