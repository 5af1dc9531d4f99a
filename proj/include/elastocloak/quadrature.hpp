#pragma once

#include <vector>

#include "elastocloak/types.hpp"

namespace elastocloak {

/// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on P_n.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int k = 0; k < n; ++k) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * k + 1.0) * z * p2 - k * p3) / (k + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

/// Integrate f over [a, b] with an n-point rule.
template <typename F>
auto integrate(F&& f, double a, double b, const GaussRule& rule) {
  using R = decltype(f(a));
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  R acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += (half * rule.weights[i]) * f(mid + half * rule.nodes[i]);
  return acc;
}

}  // namespace elastocloak
