#pragma once

#include <cstdlib>
#include <limits>
#include <vector>

#include "elastocloak/types.hpp"

namespace elastocloak {

enum class CylKind { J, Y };

/// Sequence of integer-order Bessel values J_0..J_max (and Y_0..Y_max for x > 0)
/// at a fixed real argument. Negative orders resolve through the reflection
/// rule C_{-n} = (-1)^n C_n.
struct BesselSeq {
  double x = 0.0;
  int order_max = 0;
  std::vector<double> j;
  std::vector<double> y;  // empty when x == 0

  bool has_y() const { return !y.empty(); }

  double J(int n) const {
    int a = std::abs(n);
    if (a > order_max) throw std::out_of_range("BesselSeq: order beyond sequence");
    return n < 0 ? parity_sign(a) * j[a] : j[a];
  }

  double Y(int n) const {
    if (!has_y()) throw std::domain_error("BesselSeq: Y undefined at x = 0");
    int a = std::abs(n);
    if (a > order_max) throw std::out_of_range("BesselSeq: order beyond sequence");
    return n < 0 ? parity_sign(a) * y[a] : y[a];
  }

  cplx H(int n) const { return {J(n), Y(n)}; }
};

namespace detail {

// Stirling-type estimate of -log10 |J_n(x)|, valid in the decay regime n > x.
inline double bessel_decay_digits(int n, double x) {
  return 0.5 * std::log10(6.28 * n) - n * std::log10(1.36 * x / n);
}

// Start order for the downward recurrence: lowest order whose J magnitude sits
// ~18 digits under the O(1) envelope, floored by order_max + ceil(x) + 15.
inline int miller_start_order(double x, int order_max) {
  int n = std::max({order_max + 2, static_cast<int>(std::ceil(1.1 * x)) + 2, 4});
  while (bessel_decay_digits(n, std::max(x, 1e-300)) < 18.0 && n < order_max + 4000) n += 4;
  return std::max(n, order_max + static_cast<int>(std::ceil(x)) + 15);
}

// Y_0, Y_1 by the ascending log-series; adequate below x ~ 6.
inline void y01_series(double x, double j0, double j1, double& y0, double& y1) {
  constexpr double egamma = 0.57721566490153286060651209008;
  const double lg = std::log(0.5 * x) + egamma;
  const double t = 0.25 * x * x;
  double sum = 0.0, term = 1.0, hk = 0.0;
  for (int k = 1; k < 60; ++k) {
    term *= t / (static_cast<double>(k) * k);
    hk += 1.0 / k;
    const double add = (k % 2 ? 1.0 : -1.0) * hk * term;
    sum += add;
    if (std::abs(add) < 1e-20 * (std::abs(sum) + 1e-30)) break;
  }
  y0 = (2.0 / pi) * (lg * j0 + sum);

  double sum1 = 0.0;
  term = 1.0;
  double ha = 0.0, hb = 1.0;  // H_k, H_{k+1}
  for (int k = 0; k < 60; ++k) {
    if (k > 0) {
      term *= t / (static_cast<double>(k) * (k + 1));
      ha += 1.0 / k;
      hb += 1.0 / (k + 1);
    }
    const double add = (k % 2 ? -1.0 : 1.0) * (ha + hb) * term;
    sum1 += add;
    if (std::abs(add) < 1e-20 * (std::abs(sum1) + 1e-30)) break;
  }
  y1 = (2.0 / pi) * lg * j1 - 2.0 / (pi * x) - (x / (2.0 * pi)) * sum1;
}

// Y_0, Y_1 from the outgoing-wave logarithmic derivative continued fraction
// (complex Lentz), combined with J_0, J_1 from the downward recurrence.
inline void y01_continued_fraction(double x, double j0, double j1, double& y0, double& y1) {
  constexpr double tiny = 1e-290;
  cplx f = tiny, c = f, d = 0.0;
  int k = 0;
  while (true) {
    ++k;
    const double ak = (k - 0.5) * (k - 0.5);
    const cplx bk = 2.0 * cplx{x, static_cast<double>(k)};
    d = bk + ak * d;
    if (d == cplx{0.0, 0.0}) d = tiny;
    c = bk + ak / c;
    if (c == cplx{0.0, 0.0}) c = tiny;
    d = 1.0 / d;
    const cplx delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
    if (k > 400)
      throw accuracy_error("bessel_sequences: continued fraction for Y did not converge");
  }
  const cplx ratio = -1.0 / (2.0 * x) + iu + (iu / x) * f;  // (J' + iY')/(J + iY) at order 0
  const double p = ratio.real(), q = ratio.imag();
  y0 = (p * j0 + j1) / q;  // from Re part and J_0' = -J_1
  y1 = -(q * j0 + p * y0);
}

}  // namespace detail

/// J by downward (Miller) recurrence normalized with J_0 + 2*sum J_{2k} = 1;
/// Y by upward recurrence from seeded Y_0, Y_1. x = 0 yields J_n = delta_{n0}
/// and no Y values. Upward Y values overflow to +-inf past the IEEE range.
inline BesselSeq bessel_sequences(double x, int order_max) {
  if (!std::isfinite(x) || x < 0.0)
    throw std::invalid_argument("bessel_sequences: argument must be finite and >= 0");
  if (order_max < 0) throw std::invalid_argument("bessel_sequences: order_max must be >= 0");

  BesselSeq s;
  s.x = x;
  s.order_max = order_max;

  if (x == 0.0) {
    s.j.assign(order_max + 1, 0.0);
    s.j[0] = 1.0;
    return s;
  }

  const int fill = std::max(order_max, 1);  // J_1 always needed for the Y seeds
  std::vector<double> j(fill + 1, 0.0);
  const int start = detail::miller_start_order(x, fill);
  double fp = 0.0, f = 1e-300, sum = 0.0;
  for (int n = start; n >= 0; --n) {
    const double fm = (2.0 * (n + 1) / x) * f - fp;
    fp = f;
    f = fm;
    if (n <= fill) j[n] = fm;
    if (n % 2 == 0) sum += (n == 0 ? 1.0 : 2.0) * fm;
    if (std::abs(fm) > 1e250) {
      constexpr double down = 1e-250;
      fp *= down;
      f *= down;
      sum *= down;
      for (int i = std::min(fill, start); i >= n; --i) j[i] *= down;
    }
  }
  for (double& v : j) v /= sum;

  double y0 = 0.0, y1 = 0.0;
  if (x < 5.0)
    detail::y01_series(x, j[0], j[1], y0, y1);
  else
    detail::y01_continued_fraction(x, j[0], j[1], y0, y1);

  s.y.assign(order_max + 1, 0.0);
  s.y[0] = y0;
  if (order_max >= 1) {
    s.y[1] = y1;
    for (int n = 1; n < order_max; ++n) s.y[n + 1] = (2.0 * n / x) * s.y[n] - s.y[n - 1];
  }

  j.resize(order_max + 1);
  s.j = std::move(j);
  return s;
}

/// C_n'(x) = (C_{n-1}(x) - C_{n+1}(x))/2 with C_0' = -C_1 and the reflection
/// rule for negative orders. Requires |n| + 1 <= order_max.
inline double cyl_derivative(const BesselSeq& s, CylKind kind, int n) {
  const int a = std::abs(n);
  if (a + 1 > s.order_max) throw std::out_of_range("cyl_derivative: sequence too short");
  auto c = [&](int m) { return kind == CylKind::J ? s.J(m) : s.Y(m); };
  const double d = (a == 0) ? -c(1) : 0.5 * (c(a - 1) - c(a + 1));
  return n < 0 ? parity_sign(a) * d : d;
}

}  // namespace elastocloak
