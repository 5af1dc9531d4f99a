#pragma once

#include <utility>
#include <vector>

#include "elastocloak/geometry.hpp"
#include "elastocloak/medium.hpp"
#include "elastocloak/wavefun.hpp"

namespace elastocloak {

/// Incident wave: plane compressional, plane shear, their combination, or a
/// general regular-basis expansion with coefficients A_n for |n| <= n_max.
class IncidentField {
 public:
  enum class Kind { plane_p, plane_s, combined, general };

  static IncidentField plane_p(cplx amp, double psi) {
    IncidentField f;
    f.kind_ = Kind::plane_p;
    f.amp_p_ = amp;
    f.psi_p_ = psi;
    return f;
  }

  static IncidentField plane_s(cplx amp, double psi) {
    IncidentField f;
    f.kind_ = Kind::plane_s;
    f.amp_s_ = amp;
    f.psi_s_ = psi;
    return f;
  }

  static IncidentField combined(cplx amp_p, double psi_p, cplx amp_s, double psi_s) {
    IncidentField f;
    f.kind_ = Kind::combined;
    f.amp_p_ = amp_p;
    f.psi_p_ = psi_p;
    f.amp_s_ = amp_s;
    f.psi_s_ = psi_s;
    return f;
  }

  static IncidentField general(int n_max, std::vector<cplx> coef_p, std::vector<cplx> coef_s) {
    if (n_max < 0) throw std::invalid_argument("IncidentField: n_max must be >= 0");
    const std::size_t want = 2 * static_cast<std::size_t>(n_max) + 1;
    if (coef_p.size() != want || coef_s.size() != want)
      throw std::invalid_argument("IncidentField: coefficient arrays must span |n| <= n_max");
    IncidentField f;
    f.kind_ = Kind::general;
    f.n_max_ = n_max;
    f.coef_p_ = std::move(coef_p);
    f.coef_s_ = std::move(coef_s);
    return f;
  }

  Kind kind() const { return kind_; }
  bool is_plane() const { return kind_ != Kind::general; }
  cplx amp_p() const { return amp_p_; }
  cplx amp_s() const { return amp_s_; }
  double psi_p() const { return psi_p_; }
  double psi_s() const { return psi_s_; }
  int n_max() const { return n_max_; }

  cplx coef(int n, bool shear) const {
    if (std::abs(n) > n_max_) return {};
    return (shear ? coef_s_ : coef_p_)[static_cast<std::size_t>(n + n_max_)];
  }

  IncidentField scaled(cplx factor) const {
    IncidentField f = *this;
    f.amp_p_ *= factor;
    f.amp_s_ *= factor;
    for (auto& c : f.coef_p_) c *= factor;
    for (auto& c : f.coef_s_) c *= factor;
    return f;
  }

 private:
  Kind kind_ = Kind::plane_p;
  cplx amp_p_{};
  cplx amp_s_{};
  double psi_p_ = 0.0;
  double psi_s_ = 0.0;
  int n_max_ = 0;
  std::vector<cplx> coef_p_, coef_s_;
};

/// Regular-basis coefficients of the field truncated to |n| <= n_max.
/// Plane waves expand with A_n = A i^n e^{-i n psi}.
inline std::pair<std::vector<cplx>, std::vector<cplx>> regular_coeffs(const IncidentField& f,
                                                                      int n_max) {
  if (n_max < 0) throw std::invalid_argument("regular_coeffs: n_max must be >= 0");
  const std::size_t len = 2 * static_cast<std::size_t>(n_max) + 1;
  std::vector<cplx> ap(len), as(len);
  for (int n = -n_max; n <= n_max; ++n) {
    const std::size_t i = static_cast<std::size_t>(n + n_max);
    if (f.kind() == IncidentField::Kind::general) {
      ap[i] = f.coef(n, false);
      as[i] = f.coef(n, true);
    } else {
      ap[i] = f.amp_p() * ipow(n) * std::polar(1.0, -n * f.psi_p());
      as[i] = f.amp_s() * ipow(n) * std::polar(1.0, -n * f.psi_s());
    }
  }
  return {std::move(ap), std::move(as)};
}

/// Potentials with their first and second Cartesian derivatives; everything
/// downstream (displacement, stress, polar traces) reads from this.
struct PotentialDerivs {
  cplx phi{}, psi{};
  Vec2c dphi{}, dpsi{};
  Mat2c hphi{}, hpsi{};
};

inline PotentialDerivs potential_derivs(const IncidentField& f, const WaveNumbers& wn, Vec2 x) {
  PotentialDerivs out{};
  if (f.is_plane()) {
    auto plane = [&](cplx amp, double psi, double k, cplx& val, Vec2c& grad, Mat2c& hess) {
      if (amp == cplx{}) return;
      const Vec2 d = unit_vec(psi);
      const cplx v = amp * std::exp(iu * k * (d.x * x.x + d.y * x.y));
      val += v;
      grad[0] += iu * k * d.x * v;
      grad[1] += iu * k * d.y * v;
      const double k2 = k * k;
      hess[0][0] += -k2 * d.x * d.x * v;
      hess[0][1] += -k2 * d.x * d.y * v;
      hess[1][0] += -k2 * d.x * d.y * v;
      hess[1][1] += -k2 * d.y * d.y * v;
    };
    plane(f.amp_p(), f.psi_p(), wn.k_p, out.phi, out.dphi, out.hphi);
    plane(f.amp_s(), f.psi_s(), wn.k_s, out.psi, out.dpsi, out.hpsi);
    return out;
  }

  auto accumulate = [&](double k, bool shear, cplx& val, Vec2c& grad, Mat2c& hess) {
    CylField u(CylField::Kind::J, k, x, f.n_max() + 2);
    for (int n = -f.n_max(); n <= f.n_max(); ++n) {
      const cplx a = f.coef(n, shear);
      if (a == cplx{}) continue;
      val += a * u.F(n);
      const Vec2c g = u.grad(n);
      grad[0] += a * g[0];
      grad[1] += a * g[1];
      const Mat2c h = u.hessian(n);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) hess[i][j] += a * h[i][j];
    }
  };
  accumulate(wn.k_p, false, out.phi, out.dphi, out.hphi);
  accumulate(wn.k_s, true, out.psi, out.dpsi, out.hpsi);
  return out;
}

inline std::pair<cplx, cplx> potentials(const IncidentField& f, const WaveNumbers& wn, Vec2 x) {
  const auto d = potential_derivs(f, wn, x);
  return {d.phi, d.psi};
}

/// u = grad Phi + curl(Psi k) = (Phi_x + Psi_y, Phi_y - Psi_x).
inline Vec2c incident_displacement(const IncidentField& f, const WaveNumbers& wn, Vec2 x) {
  const auto d = potential_derivs(f, wn, x);
  return {d.dphi[0] + d.dpsi[1], d.dphi[1] - d.dpsi[0]};
}

inline Mat2c incident_stress(const IncidentField& f, const Material& m, const WaveNumbers& wn,
                             Vec2 x) {
  const auto d = potential_derivs(f, wn, x);
  const cplx divu = -wn.k_p * wn.k_p * d.phi;  // laplacian Phi
  Mat2c s;
  s[0][0] = m.lambda * divu + 2.0 * m.mu * (d.hphi[0][0] + d.hpsi[0][1]);
  s[1][1] = m.lambda * divu + 2.0 * m.mu * (d.hphi[1][1] - d.hpsi[0][1]);
  s[0][1] = m.mu * (2.0 * d.hphi[0][1] + d.hpsi[1][1] - d.hpsi[0][0]);
  s[1][0] = s[0][1];
  return s;
}

/// Displacement and traction trace on a device arc, in the arc-centered polar
/// frame at r = a_m; stresses are returned divided by mu.
struct PolarTrace {
  cplx u_r{}, u_theta{};
  cplx sigma_rr_over_mu{}, sigma_rtheta_over_mu{};
};

inline PolarTrace polar_trace(const IncidentField& f, const Material& m, const WaveNumbers& wn,
                              const SourceArc& arc, double theta) {
  const Vec2 er = unit_vec(theta);
  const Vec2 et{-er.y, er.x};
  const double r = arc.radius;
  const Vec2 y = arc.center + er * r;
  const auto d = potential_derivs(f, wn, y);

  auto dot = [](const Vec2c& v, Vec2 e) { return v[0] * e.x + v[1] * e.y; };
  auto quad = [](const Mat2c& h, Vec2 a, Vec2 b) {
    return a.x * (h[0][0] * b.x + h[0][1] * b.y) + a.y * (h[1][0] * b.x + h[1][1] * b.y);
  };

  const cplx phi_r = dot(d.dphi, er), phi_t = r * dot(d.dphi, et);
  const cplx psi_r = dot(d.dpsi, er), psi_t = r * dot(d.dpsi, et);
  const cplx phi_rr = quad(d.hphi, er, er);
  const cplx psi_rr = quad(d.hpsi, er, er);
  const cplx phi_rt = dot(d.dphi, et) + r * quad(d.hphi, er, et);
  const cplx psi_rt = dot(d.dpsi, et) + r * quad(d.hpsi, er, et);
  const cplx psi_tt = r * (-dot(d.dpsi, er) + r * quad(d.hpsi, et, et));

  PolarTrace t;
  t.u_r = phi_r + psi_t / r;
  t.u_theta = phi_t / r - psi_r;
  t.sigma_rr_over_mu =
      -(m.lambda / m.mu) * wn.k_p * wn.k_p * d.phi + 2.0 * (phi_rr + psi_rt / r - psi_t / (r * r));
  t.sigma_rtheta_over_mu =
      2.0 * (phi_rt / r - phi_t / (r * r)) + (psi_tt / (r * r) - psi_rr + psi_r / r);
  return t;
}

}  // namespace elastocloak
