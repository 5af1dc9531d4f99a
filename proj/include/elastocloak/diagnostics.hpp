#pragma once

#include <vector>

#include "elastocloak/sources.hpp"

namespace elastocloak {

/// Truncated near-field (E) and far-field (F) expansions of the device field
/// about the origin, with the cloaking-constraint residuals
///   near: |A_n + E_n|   (total field must vanish in the cloak)
///   far:  |F_n|         (devices must not radiate).
struct CoefficientDiagnostics {
  int n_min = 0;
  int n_max = 0;
  std::vector<cplx> F_p, F_s, E_p, E_s;
  std::vector<double> res_near_p, res_near_s, res_far_p, res_far_s;

  std::size_t size() const { return F_p.size(); }
  int n_at(std::size_t i) const { return n_min + static_cast<int>(i); }
};

/// Default half-width of the reported n-range: covers the active coefficient
/// bandwidth ~k_s b. The near-field sums lose digits fast beyond that (the
/// per-device re-expansions grow factorially and cancel across devices), so
/// the default stays narrow; widen explicitly if you accept the noise.
inline int default_n_halfwidth(const CloakConfig& cfg, const WaveNumbers& wn) {
  double b = 0.0;
  for (const auto& arc : cfg.arcs) b = std::max(b, arc.center.norm());
  return static_cast<int>(std::ceil(wn.k_s * b)) + 5;
}

/// F_n = sum_{m,l} B(m,l) U_{n-l}^-(k x_m),  E_n = sum_{m,l} B(m,l) V_{n-l}^-(k x_m)
/// per channel, with k = k_p (compressional) or k_s (shear).
inline CoefficientDiagnostics nearfar_coeffs(const SourceAmplitudes& B, const CloakConfig& cfg,
                                             const WaveNumbers& wn, const IncidentField& field,
                                             int n_min, int n_max) {
  if (n_min > n_max) throw std::invalid_argument("nearfar_coeffs: empty n range");
  for (const auto& arc : cfg.arcs)
    if (arc.center.norm() <= arc.radius)
      throw std::invalid_argument("nearfar_coeffs: origin inside a device disk");

  const std::size_t count = static_cast<std::size_t>(n_max - n_min) + 1;
  CoefficientDiagnostics d;
  d.n_min = n_min;
  d.n_max = n_max;
  d.F_p.assign(count, cplx{});
  d.F_s.assign(count, cplx{});
  d.E_p.assign(count, cplx{});
  d.E_s.assign(count, cplx{});

  const int N = B.l_max;
  const int ord = std::max(std::abs(n_min), std::abs(n_max)) + N + 1;
  for (std::size_t m = 0; m < cfg.device_count(); ++m) {
    const Vec2 xm = cfg.arcs[m].center;
    const double beta = xm.arg();
    const BesselSeq sp = bessel_sequences(wn.k_p * xm.norm(), ord);
    const BesselSeq ss = bessel_sequences(wn.k_s * xm.norm(), ord);
    for (int l = -N; l <= N; ++l) {
      const cplx bp = B.Bp(m, l), bs = B.Bs(m, l);
      for (std::size_t i = 0; i < count; ++i) {
        const int shift = d.n_at(i) - l;
        const cplx ph = std::polar(1.0, -shift * beta);
        d.F_p[i] += bp * sp.J(shift) * ph;
        d.F_s[i] += bs * ss.J(shift) * ph;
        d.E_p[i] += bp * sp.H(shift) * ph;
        d.E_s[i] += bs * ss.H(shift) * ph;
      }
    }
  }

  const int nabs = std::max(std::abs(n_min), std::abs(n_max));
  const auto [ap, as] = regular_coeffs(field, nabs);
  d.res_near_p.resize(count);
  d.res_near_s.resize(count);
  d.res_far_p.resize(count);
  d.res_far_s.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t k = static_cast<std::size_t>(d.n_at(i) + nabs);
    d.res_near_p[i] = std::abs(ap[k] + d.E_p[i]);
    d.res_near_s[i] = std::abs(as[k] + d.E_s[i]);
    d.res_far_p[i] = std::abs(d.F_p[i]);
    d.res_far_s[i] = std::abs(d.F_s[i]);
  }
  return d;
}

struct ConstraintReport {
  double max_near_p = 0.0, max_near_s = 0.0, max_far_p = 0.0, max_far_s = 0.0;
  std::vector<int> n;
  std::vector<double> near_p, near_s, far_p, far_s;
};

inline ConstraintReport constraint_report(const CoefficientDiagnostics& d) {
  ConstraintReport r;
  for (std::size_t i = 0; i < d.size(); ++i) {
    r.n.push_back(d.n_at(i));
    r.near_p.push_back(d.res_near_p[i]);
    r.near_s.push_back(d.res_near_s[i]);
    r.far_p.push_back(d.res_far_p[i]);
    r.far_s.push_back(d.res_far_s[i]);
    r.max_near_p = std::max(r.max_near_p, d.res_near_p[i]);
    r.max_near_s = std::max(r.max_near_s, d.res_near_s[i]);
    r.max_far_p = std::max(r.max_far_p, d.res_far_p[i]);
    r.max_far_s = std::max(r.max_far_s, d.res_far_s[i]);
  }
  return r;
}

/// Device field inside the cloak from the representation integral over the
/// arcs, using the point-force tensor and its traction kernel. Independent of
/// the multipole series; equals -u_incident inside the cloak.
inline Vec2c boundary_integral_field(const IncidentField& field, const CloakConfig& cfg,
                                     const Material& mat, const WaveNumbers& wn, Vec2 x) {
  if (cfg.tangent_symmetric() && !in_cloak(cfg, x))
    throw std::domain_error("boundary_integral_field: point outside the cloaked region");

  auto run = [&](int factor) {
    Vec2c total{};
    for (const auto& arc : cfg.arcs) {
      // the kernel peaks where the arc passes nearest to x; resolve that width
      const double gap = std::abs((x - arc.center).norm() - arc.radius);
      const int prox = static_cast<int>(
          std::ceil(7.0 * arc.radius * arc.span() / std::max(gap, 1e-3 * arc.radius)));
      const int nodes =
          factor *
          std::min(4096, std::max({64, 16 * static_cast<int>(std::ceil(wn.k_s * arc.radius)),
                                   prox}));
      const GaussRule rule = gauss_legendre(nodes);
      const double t1 = arc.theta1, t2 = arc.theta1 + arc.span();
      const double mid = 0.5 * (t1 + t2), half = 0.5 * (t2 - t1);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double theta = mid + half * rule.nodes[i];
        const double w = half * rule.weights[i] * arc.radius;
        const Vec2 er = unit_vec(theta);
        const Vec2 y = arc.center + er * arc.radius;
        const double nvec[2] = {-er.x, -er.y};  // outward normal of the cloak
        const Vec2c u = incident_displacement(field, wn, y);
        const Mat2c sig = incident_stress(field, mat, wn, y);
        const Vec2 z = y - x;
        const Mat2c G = green_tensor(mat, wn, z);
        const TractionKernel S = green_traction(mat, wn, z);
        for (int k = 0; k < 2; ++k) {
          cplx v{};
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) v += nvec[a] * (u[b] * S.s[a][b][k] - sig[a][b] * G[b][k]);
          total[k] -= w * v;
        }
      }
    }
    return total;
  };

  const Vec2c coarse = run(1);
  const Vec2c fine = run(2);
  const double scale = std::max({1.0, std::abs(fine[0]), std::abs(fine[1])});
  if (std::abs(coarse[0] - fine[0]) > 1e-10 * scale ||
      std::abs(coarse[1] - fine[1]) > 1e-10 * scale)
    throw accuracy_error("boundary_integral_field: quadrature refinement disagreement");
  return fine;
}

}  // namespace elastocloak
