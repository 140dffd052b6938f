#pragma once

namespace secrecy {

inline constexpr double kEulerGamma = 0.57721566490153286061;

// Digamma at positive integer arguments: psi(r) = H_{r-1} - gamma.
// Throws std::domain_error for r < 1.
double digamma(int r);

// Harmonic number H_n (H_0 = 0).
double harmonic(int n);

// pi^2/6 - sum_{i=1}^{m-1} 1/i^2, i.e. the tail sum_{i>=m} 1/i^2.
// This is the variance of log X for X ~ Gamma(m, 1).
double inverse_square_tail(int m);

double erf_real(double x);

// Gaussian tail probability Q(x) = P(N(0,1) > x).
double q_function(double x);

// E[{Z}^+] for Z ~ N(mu, sigma^2). sigma = 0 degenerates to max(mu, 0).
double rectified_gaussian_mean(double mu, double sigma);

// Normalizing constants under which the maximum of `population` i.i.d.
// N(mu, sigma^2) draws converges to a Gumbel law.
struct GumbelConstants {
  double scale = 0.0;     // a_K
  double location = 0.0;  // b_K
  double population = 0.0;
  double mu = 0.0;
  double sigma = 0.0;
};

GumbelConstants gumbel_constants(double population, double mu, double sigma);

// Asymptotic mean of the maximum of `population` i.i.d. N(mu, sigma^2) draws.
double max_order_mean(double population, double mu, double sigma);

// Asymptotic mean of the r-th largest of `population` i.i.d. N(mu, sigma^2)
// draws; r = 1 coincides with max_order_mean.
double rth_order_mean(double population, int r, double mu, double sigma);

}  // namespace secrecy
