#include "secrecy/special_math.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace secrecy {

double harmonic(int n) {
  double h = 0.0;
  for (int j = n; j >= 1; --j) h += 1.0 / j;  // small terms first
  return h;
}

double digamma(int r) {
  if (r < 1) throw std::domain_error("digamma: argument must be a positive integer, got " + std::to_string(r));
  return harmonic(r - 1) - kEulerGamma;
}

double inverse_square_tail(int m) {
  if (m < 1) throw std::domain_error("inverse_square_tail: argument must be >= 1");
  constexpr double pi2_over_6 = 1.64493406684822643647;
  double partial = 0.0;
  for (int i = m - 1; i >= 1; --i) partial += 1.0 / (static_cast<double>(i) * i);
  return pi2_over_6 - partial;
}

double erf_real(double x) { return std::erf(x); }

double q_function(double x) {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  return 0.5 * std::erfc(x * inv_sqrt2);
}

double rectified_gaussian_mean(double mu, double sigma) {
  if (sigma < 0.0) throw std::domain_error("rectified_gaussian_mean: sigma must be >= 0");
  if (sigma == 0.0) return mu > 0.0 ? mu : 0.0;
  constexpr double inv_sqrt_2pi = 0.39894228040143267794;
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  const double z = mu / sigma;
  return sigma * inv_sqrt_2pi * std::exp(-0.5 * z * z) +
         0.5 * mu * (1.0 + std::erf(z * inv_sqrt2));
}

GumbelConstants gumbel_constants(double population, double mu, double sigma) {
  if (!(population >= 2.0))
    throw std::domain_error("gumbel_constants: population must be >= 2");
  if (!(sigma > 0.0)) throw std::domain_error("gumbel_constants: sigma must be > 0");
  const double log_k = std::log(population);
  const double root = std::sqrt(2.0 * log_k);
  GumbelConstants c;
  c.scale = sigma / root;
  c.location = sigma * root - sigma * std::log(4.0 * M_PI * log_k) / (2.0 * root) + mu;
  c.population = population;
  c.mu = mu;
  c.sigma = sigma;
  return c;
}

double max_order_mean(double population, double mu, double sigma) {
  const GumbelConstants c = gumbel_constants(population, mu, sigma);
  return c.location + kEulerGamma * c.scale;
}

double rth_order_mean(double population, int r, double mu, double sigma) {
  if (r < 1) throw std::domain_error("rth_order_mean: r must be >= 1");
  if (static_cast<double>(r) > population)
    throw std::domain_error("rth_order_mean: r exceeds the population size");
  const GumbelConstants c = gumbel_constants(population, mu, sigma);
  return c.location - c.scale * digamma(r);
}

}  // namespace secrecy
