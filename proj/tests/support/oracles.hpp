#pragma once

// Test-only reference routes, deliberately independent of the library
// implementations they check: power series, direct integral representations,
// and finite differences.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "elastocloak/quadrature.hpp"
#include "elastocloak/types.hpp"

namespace oracles {

using elastocloak::cplx;
using elastocloak::pi;

/// Ascending power series for J_n(x); fine for x <~ 12 in doubles.
inline double series_j(int n, double x) {
  const int a = std::abs(n);
  double term = 1.0;
  for (int k = 1; k <= a; ++k) term *= 0.5 * x / k;
  double sum = term;
  const double q = 0.25 * x * x;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<double>(k) * (k + a));
    sum += term;
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-30)) break;
  }
  return (n < 0 && a % 2 == 1) ? -sum : sum;
}

/// Integral representation J_n(x) = (1/pi) int_0^pi cos(n t - x sin t) dt.
inline double quad_j(int n, double x) {
  static const elastocloak::GaussRule rule = elastocloak::gauss_legendre(1024);
  auto f = [&](double t) { return std::cos(n * t - x * std::sin(t)); };
  return elastocloak::integrate(f, 0.0, pi, rule) / pi;
}

/// Integral representation of Y_n for small n:
/// Y_n(x) = (1/pi) int_0^pi sin(x sin t - n t) dt
///        - (1/pi) int_0^inf [e^{nt} + (-1)^n e^{-nt}] e^{-x sinh t} dt.
inline double quad_y(int n, double x) {
  static const elastocloak::GaussRule rule = elastocloak::gauss_legendre(1024);
  auto osc = [&](double t) { return std::sin(x * std::sin(t) - n * t); };
  const double part1 = elastocloak::integrate(osc, 0.0, pi, rule) / pi;
  const double tmax = std::asinh(750.0 / x) + 1.0;
  auto tail = [&](double t) {
    return (std::exp(n * t) + (n % 2 == 0 ? 1.0 : -1.0) * std::exp(-n * t)) *
           std::exp(-x * std::sinh(t));
  };
  const double part2 = elastocloak::integrate(tail, 0.0, tmax, rule) / pi;
  return part1 - part2;
}

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eedu);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

template <typename F>
cplx fd_derivative(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracles
