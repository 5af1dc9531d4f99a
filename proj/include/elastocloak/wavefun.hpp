#pragma once

#include "elastocloak/bessel.hpp"
#include "elastocloak/types.hpp"

namespace elastocloak {

enum class WaveKind { regular, outgoing, regular_deriv, outgoing_deriv };
enum class PhaseSign { plus, minus };

/// Radial family C_n(k r) e^{i n theta} at a fixed scaled point k*z, with the
/// order-shift calculus for Cartesian derivatives:
///   d/dx F_n = k/2 (F_{n-1} - F_{n+1}),  d/dy F_n = ik/2 (F_{n-1} + F_{n+1}).
/// kind J gives the regular family, H the outgoing one (first kind).
class CylField {
 public:
  enum class Kind { J, H };

  CylField(Kind kind, double k, Vec2 z, int order_budget)
      : kind_(kind), k_(k), r_(z.norm()), theta_(z.arg()) {
    if (kind_ == Kind::H && r_ == 0.0)
      throw std::domain_error("CylField: outgoing family is singular at the origin");
    seq_ = bessel_sequences(k_ * r_, order_budget);
  }

  double k() const { return k_; }
  double r() const { return r_; }
  double theta() const { return theta_; }
  int order_budget() const { return seq_.order_max; }

  cplx radial(int n) const { return kind_ == Kind::J ? cplx{seq_.J(n), 0.0} : seq_.H(n); }

  cplx radial_deriv(int n) const {
    if (kind_ == Kind::J) return {cyl_derivative(seq_, CylKind::J, n), 0.0};
    return {cyl_derivative(seq_, CylKind::J, n), cyl_derivative(seq_, CylKind::Y, n)};
  }

  cplx phase(int n) const { return std::polar(1.0, n * theta_); }

  cplx F(int n) const { return radial(n) * phase(n); }
  cplx Fr(int n) const { return radial_deriv(n) * phase(n); }

  Vec2c grad(int n) const {
    const cplx lo = F(n - 1), hi = F(n + 1);
    return {0.5 * k_ * (lo - hi), 0.5 * iu * k_ * (lo + hi)};
  }

  Mat2c hessian(int n) const {
    const cplx lo = F(n - 2), mid = F(n), hi = F(n + 2);
    const double k2 = k_ * k_;
    const cplx fxx = 0.25 * k2 * (lo - 2.0 * mid + hi);
    const cplx fxy = 0.25 * iu * k2 * (lo - hi);
    const cplx fyy = -0.25 * k2 * (hi + 2.0 * mid + lo);
    return {{{fxx, fxy}, {fxy, fyy}}};
  }

  /// Third derivatives packed as {xxx, xxy, xyy, yyy}.
  std::array<cplx, 4> third(int n) const {
    const cplx m3 = F(n - 3), m1 = F(n - 1), p1 = F(n + 1), p3 = F(n + 3);
    const double k3 = k_ * k_ * k_;
    return {k3 / 8.0 * (m3 - 3.0 * m1 + 3.0 * p1 - p3),
            iu * k3 / 8.0 * (p3 - p1 - m1 + m3),
            k3 / 8.0 * (p3 + p1 - m1 - m3),
            -iu * k3 / 8.0 * (p3 + 3.0 * p1 + 3.0 * m1 + m3)};
  }

 private:
  Kind kind_;
  double k_, r_, theta_;
  BesselSeq seq_;
};

/// Cylindrical wave functions: regular J_n(|z|) e^{+-i n arg z}, outgoing
/// H^(1)_n(|z|) e^{+-i n arg z}, and their radial-derivative variants.
inline cplx wavefun(WaveKind kind, PhaseSign sign, int n, Vec2 z) {
  const double r = z.norm();
  const bool outgoing = (kind == WaveKind::outgoing || kind == WaveKind::outgoing_deriv);
  const bool deriv = (kind == WaveKind::regular_deriv || kind == WaveKind::outgoing_deriv);
  if (outgoing && r == 0.0)
    throw std::domain_error("wavefun: outgoing wave function is singular at |z| = 0");

  const int budget = std::abs(n) + 1;
  const BesselSeq s = bessel_sequences(r, budget);
  cplx radial;
  if (!deriv) {
    radial = outgoing ? s.H(n) : cplx{s.J(n), 0.0};
  } else if (outgoing) {
    radial = {cyl_derivative(s, CylKind::J, n), cyl_derivative(s, CylKind::Y, n)};
  } else {
    radial = {cyl_derivative(s, CylKind::J, n), 0.0};
  }
  const double ang = (sign == PhaseSign::plus ? 1.0 : -1.0) * n * z.arg();
  return radial * std::polar(1.0, ang);
}

}  // namespace elastocloak
