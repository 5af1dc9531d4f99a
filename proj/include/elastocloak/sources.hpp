#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "elastocloak/geometry.hpp"
#include "elastocloak/incident.hpp"
#include "elastocloak/quadrature.hpp"

namespace elastocloak {

/// Multipole source amplitudes B(m, l) for the compressional and shear
/// channels, l in [-l_max, l_max], stored densely per device.
struct SourceAmplitudes {
  int l_max = 0;
  std::size_t device_count = 0;
  std::vector<cplx> bp, bs;

  SourceAmplitudes() = default;
  SourceAmplitudes(std::size_t devices, int n)
      : l_max(n),
        device_count(devices),
        bp(devices * (2 * static_cast<std::size_t>(n) + 1)),
        bs(devices * (2 * static_cast<std::size_t>(n) + 1)) {}

  std::size_t index(std::size_t m, int l) const {
    return m * (2 * static_cast<std::size_t>(l_max) + 1) + static_cast<std::size_t>(l + l_max);
  }
  cplx Bp(std::size_t m, int l) const { return bp[index(m, l)]; }
  cplx Bs(std::size_t m, int l) const { return bs[index(m, l)]; }
  cplx& Bp(std::size_t m, int l) { return bp[index(m, l)]; }
  cplx& Bs(std::size_t m, int l) { return bs[index(m, l)]; }
};

/// Indices and device constants entering the amplitude series kernel.
struct SourceKernelParams {
  double alpha_p = 0.0;  // k_p * a_m
  double alpha_s = 0.0;  // k_s * a_m
  int q = 0;
  int l = 0;
};

namespace detail {

// Bessel lookups J_l, J_l', J_q, J_q' drawn from precomputed sequences.
struct KernelTables {
  const BesselSeq* at_p = nullptr;
  const BesselSeq* at_s = nullptr;
  double Jp(int n) const { return at_p->J(n); }
  double Jpd(int n) const { return cyl_derivative(*at_p, CylKind::J, n); }
  double Js(int n) const { return at_s->J(n); }
  double Jsd(int n) const { return cyl_derivative(*at_s, CylKind::J, n); }
};

// v = M(alpha, beta) . (J_q(alpha), i J_q'(alpha)) with the matrix of the
// amplitude series; alpha_first selects which of (alpha_p, alpha_s) plays
// alpha. Undefined at q + l = 0 (handled by the limit in the assembly).
inline std::pair<cplx, cplx> kernel_from_tables(const SourceKernelParams& p,
                                                const KernelTables& t, bool alpha_is_p) {
  const double as2 = p.alpha_s * p.alpha_s;
  const double c = as2 / static_cast<double>(p.q + p.l);
  const double alpha = alpha_is_p ? p.alpha_p : p.alpha_s;
  const double jl_a = alpha_is_p ? t.Jp(p.l) : t.Js(p.l);
  const double jld_a = alpha_is_p ? t.Jpd(p.l) : t.Jsd(p.l);
  const double jl_b = alpha_is_p ? t.Js(p.l) : t.Jp(p.l);
  const double jld_b = alpha_is_p ? t.Jsd(p.l) : t.Jpd(p.l);
  const double jq = alpha_is_p ? t.Jp(p.q) : t.Js(p.q);
  const double jqd = alpha_is_p ? t.Jpd(p.q) : t.Jsd(p.q);

  const cplx v1 = (c - 2.0 * p.q) * alpha * jld_a * jq - (c - 2.0 * p.l) * alpha * jl_a * jqd;
  const cplx v2 =
      -iu * ((as2 - 2.0 * static_cast<double>(p.l) * p.q) * jl_b * jq +
             2.0 * p.alpha_p * p.alpha_s * jld_b * jqd);
  return {v1, v2};
}

// Residue of the series at q = -l: the arc factor over (q + l) tends to
// -i(theta2 - theta1) on the entries carrying alpha_s^2/(q+l); the rest of
// the kernel is annihilated by the vanishing arc factor.
inline cplx kernel_limit_term(const SourceKernelParams& p, const KernelTables& t, bool alpha_is_p,
                              double span) {
  const double as2 = p.alpha_s * p.alpha_s;
  const double alpha = alpha_is_p ? p.alpha_p : p.alpha_s;
  const double jl = alpha_is_p ? t.Jp(p.l) : t.Js(p.l);
  const double jld = alpha_is_p ? t.Jpd(p.l) : t.Jsd(p.l);
  const double jq = alpha_is_p ? t.Jp(p.q) : t.Js(p.q);
  const double jqd = alpha_is_p ? t.Jpd(p.q) : t.Jsd(p.q);
  return -iu * span * as2 * alpha * (jld * jq - jl * jqd);
}

// Per-device incident weights W(q), q in [-Q, Q]: the series reduces every
// incidence to these together with the kernel.
using DeviceWeights = std::pair<std::vector<cplx>, std::vector<cplx>>;

inline SourceAmplitudes assemble_amplitudes(
    const CloakConfig& cfg, const WaveNumbers& wn, int n_outer, int q_inner,
    const std::function<DeviceWeights(std::size_t)>& weights_for_device) {
  SourceAmplitudes out(cfg.device_count(), n_outer);
  const int ord = std::max(n_outer, q_inner) + 2;
  for (std::size_t m = 0; m < cfg.device_count(); ++m) {
    const SourceArc& arc = cfg.arcs[m];
    const double ap = wn.k_p * arc.radius, as = wn.k_s * arc.radius;
    const BesselSeq seq_p = bessel_sequences(ap, ord);
    const BesselSeq seq_s = bessel_sequences(as, ord);
    const KernelTables tables{&seq_p, &seq_s};
    const auto [wp, ws] = weights_for_device(m);
    const double span = arc.span();
    const double norm = 1.0 / (4.0 * as * as);

    for (int l = -n_outer; l <= n_outer; ++l) {
      cplx accp{}, accs{};
      for (int q = -q_inner; q <= q_inner; ++q) {
        const cplx w_p = wp[static_cast<std::size_t>(q + q_inner)];
        const cplx w_s = ws[static_cast<std::size_t>(q + q_inner)];
        const SourceKernelParams prm{ap, as, q, l};
        if (q + l == 0) {
          accp += w_p * kernel_limit_term(prm, tables, true, span);
          accs += w_s * kernel_limit_term(prm, tables, false, span);
          continue;
        }
        const cplx arcf =
            std::polar(1.0, -(q + l) * arc.theta2) - std::polar(1.0, -(q + l) * arc.theta1);
        const auto [v1p, v2p] = kernel_from_tables(prm, tables, true);
        const auto [v1s, v2s] = kernel_from_tables(prm, tables, false);
        accp += arcf * (w_p * v1p - w_s * v2s);
        accs += arcf * (w_p * v2p + w_s * v1s);
      }
      out.Bp(m, l) = norm * accp;
      out.Bs(m, l) = norm * accs;
    }
  }
  return out;
}

}  // namespace detail

/// Series kernel (v1, v2) for explicit indices; the assembly paths use the
/// table-backed variant internally. q + l = 0 must go through the limit.
inline std::pair<cplx, cplx> source_kernel(const SourceKernelParams& p, double alpha,
                                           double beta) {
  if (p.q + p.l == 0)
    throw std::domain_error("source_kernel: q + l = 0 requires the analytic limit");
  const int ord = std::max(std::abs(p.q), std::abs(p.l)) + 2;
  const BesselSeq sa = bessel_sequences(alpha, ord);
  const BesselSeq sb = bessel_sequences(beta, ord);
  const double as2 = p.alpha_s * p.alpha_s;
  const double c = as2 / static_cast<double>(p.q + p.l);
  const cplx v1 = (c - 2.0 * p.q) * alpha * cyl_derivative(sa, CylKind::J, p.l) * sa.J(p.q) -
                  (c - 2.0 * p.l) * alpha * sa.J(p.l) * cyl_derivative(sa, CylKind::J, p.q);
  const cplx v2 = -iu * ((as2 - 2.0 * static_cast<double>(p.l) * p.q) * sb.J(p.l) * sa.J(p.q) +
                         2.0 * p.alpha_p * p.alpha_s * cyl_derivative(sb, CylKind::J, p.l) *
                             cyl_derivative(sa, CylKind::J, p.q));
  return {v1, v2};
}

/// Default inner truncation: the J_q factors decay super-exponentially past
/// q ~ alpha_s, so N plus a fixed margin suffices.
inline int default_inner_truncation(const CloakConfig& cfg, const WaveNumbers& wn, int n_outer) {
  double amax = 0.0;
  for (const auto& arc : cfg.arcs) amax = std::max(amax, arc.radius);
  return n_outer + static_cast<int>(std::ceil(wn.k_s * amax)) + 10;
}

/// Source amplitudes for plane/combined incidence via the reduced series.
inline SourceAmplitudes plane_amplitudes(const CloakConfig& cfg, const Material& /*m*/,
                                         const WaveNumbers& wn, const IncidentField& field,
                                         int n_outer, int q_inner = -1) {
  if (field.kind() == IncidentField::Kind::general)
    throw std::invalid_argument("plane_amplitudes: use general_amplitudes for expanded fields");
  if (n_outer < 0) throw std::invalid_argument("plane_amplitudes: truncation must be >= 0");
  if (q_inner < 0) q_inner = default_inner_truncation(cfg, wn, n_outer);
  if (q_inner < n_outer) throw std::invalid_argument("plane_amplitudes: invalid truncation Q < N");

  auto weights = [&](std::size_t m) {
    const Vec2 xm = cfg.arcs[m].center;
    const Vec2 dp = unit_vec(field.psi_p()), ds = unit_vec(field.psi_s());
    const cplx phi_m = field.amp_p() * std::exp(iu * wn.k_p * (dp.x * xm.x + dp.y * xm.y));
    const cplx psi_m = field.amp_s() * std::exp(iu * wn.k_s * (ds.x * xm.x + ds.y * xm.y));
    detail::DeviceWeights w;
    w.first.resize(2 * q_inner + 1);
    w.second.resize(2 * q_inner + 1);
    for (int q = -q_inner; q <= q_inner; ++q) {
      const std::size_t i = static_cast<std::size_t>(q + q_inner);
      w.first[i] = ipow(q) * std::polar(1.0, q * field.psi_p()) * phi_m;
      w.second[i] = ipow(q) * std::polar(1.0, q * field.psi_s()) * psi_m;
    }
    return w;
  };
  return detail::assemble_amplitudes(cfg, wn, n_outer, q_inner, weights);
}

/// Source amplitudes for a regular-basis incident expansion. The coefficient
/// range must cover the inner sum: translation factors die off once
/// |n + q| exceeds k|x_m| by a margin.
inline SourceAmplitudes general_amplitudes(const CloakConfig& cfg, const Material& /*m*/,
                                           const WaveNumbers& wn, const std::vector<cplx>& coef_p,
                                           const std::vector<cplx>& coef_s, int n_min, int n_outer,
                                           int q_inner = -1) {
  if (coef_p.size() != coef_s.size())
    throw std::invalid_argument("general_amplitudes: coefficient arrays must match");
  if (n_outer < 0) throw std::invalid_argument("general_amplitudes: truncation must be >= 0");
  if (q_inner < 0) q_inner = default_inner_truncation(cfg, wn, n_outer);
  if (q_inner < n_outer)
    throw std::invalid_argument("general_amplitudes: invalid truncation Q < N");

  const int n_count = static_cast<int>(coef_p.size());
  auto weights = [&](std::size_t m) {
    const Vec2 xm = cfg.arcs[m].center;
    const double beta = xm.arg();
    const int ord = q_inner + std::max(std::abs(n_min), std::abs(n_min + n_count - 1)) + 2;
    const BesselSeq up = bessel_sequences(wn.k_p * xm.norm(), ord);
    const BesselSeq us = bessel_sequences(wn.k_s * xm.norm(), ord);
    detail::DeviceWeights w;
    w.first.assign(2 * q_inner + 1, cplx{});
    w.second.assign(2 * q_inner + 1, cplx{});
    for (int q = -q_inner; q <= q_inner; ++q) {
      cplx tp{}, ts{};
      for (int i = 0; i < n_count; ++i) {
        const int n = n_min + i;
        const cplx ph = std::polar(1.0, (n + q) * beta);
        if (coef_p[i] != cplx{}) tp += coef_p[i] * up.J(n + q) * ph;
        if (coef_s[i] != cplx{}) ts += coef_s[i] * us.J(n + q) * ph;
      }
      const std::size_t idx = static_cast<std::size_t>(q + q_inner);
      const double sgn = parity_sign(q);
      w.first[idx] = sgn * tp;
      w.second[idx] = sgn * ts;
    }
    return w;
  };
  return detail::assemble_amplitudes(cfg, wn, n_outer, q_inner, weights);
}

inline SourceAmplitudes general_amplitudes(const CloakConfig& cfg, const Material& mat,
                                           const WaveNumbers& wn, const IncidentField& field,
                                           int n_outer, int q_inner = -1) {
  if (field.kind() != IncidentField::Kind::general)
    throw std::invalid_argument("general_amplitudes: field must carry expansion coefficients");
  std::vector<cplx> cp, cs;
  for (int n = -field.n_max(); n <= field.n_max(); ++n) {
    cp.push_back(field.coef(n, false));
    cs.push_back(field.coef(n, true));
  }
  return general_amplitudes(cfg, mat, wn, cp, cs, -field.n_max(), n_outer, q_inner);
}

/// Dispatch on the incidence kind. For a general field the expansion must
/// already cover the inner sum (see general_amplitudes).
inline SourceAmplitudes amplitudes_for(const CloakConfig& cfg, const Material& mat,
                                       const WaveNumbers& wn, const IncidentField& field,
                                       int n_outer, int q_inner = -1) {
  if (field.kind() == IncidentField::Kind::general)
    return general_amplitudes(cfg, mat, wn, field, n_outer, q_inner);
  return plane_amplitudes(cfg, mat, wn, field, n_outer, q_inner);
}

/// Independent route: direct quadrature of the arc integrals for one (m, l).
/// Serves as the correctness oracle for the series assemblies.
inline std::pair<cplx, cplx> quadrature_amplitudes(const CloakConfig& cfg, const Material& mat,
                                                   const WaveNumbers& wn,
                                                   const IncidentField& field, int l,
                                                   std::size_t m) {
  if (m >= cfg.device_count())
    throw std::invalid_argument("quadrature_amplitudes: device index out of range");
  const SourceArc& arc = cfg.arcs[m];
  const double ap = wn.k_p * arc.radius, as = wn.k_s * arc.radius;
  const int ord = std::abs(l) + 2;
  const BesselSeq sp = bessel_sequences(ap, ord);
  const BesselSeq ss = bessel_sequences(as, ord);
  const double jl_p = sp.J(l), jld_p = cyl_derivative(sp, CylKind::J, l);
  const double jl_s = ss.J(l), jld_s = cyl_derivative(ss, CylKind::J, l);
  const double as2 = as * as;
  const double ll = static_cast<double>(l);

  auto integrand = [&](double theta) -> std::array<cplx, 2> {
    const PolarTrace t = polar_trace(field, mat, wn, arc, theta);
    const cplx e = std::polar(1.0, -l * theta);
    const cplx bp =
        e * (iu * ap * jld_p * t.sigma_rr_over_mu + ll * jl_p * t.sigma_rtheta_over_mu +
             iu * ((as2 - 2.0 * ll * ll) * jl_p + 2.0 * ap * jld_p) * (t.u_r / arc.radius) +
             2.0 * ll * (jl_p - ap * jld_p) * (t.u_theta / arc.radius));
    const cplx bs =
        e * (-iu * as * jld_s * t.sigma_rtheta_over_mu + ll * jl_s * t.sigma_rr_over_mu -
             iu * ((as2 - 2.0 * ll * ll) * jl_s + 2.0 * as * jld_s) * (t.u_theta / arc.radius) +
             2.0 * ll * (jl_s - as * jld_s) * (t.u_r / arc.radius));
    return {bp, bs};
  };

  auto run = [&](int nodes) -> std::array<cplx, 2> {
    const GaussRule rule = gauss_legendre(nodes);
    const double t1 = arc.theta1, t2 = arc.theta1 + arc.span();
    std::array<cplx, 2> acc{};
    const double mid = 0.5 * (t1 + t2), half = 0.5 * (t2 - t1);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const auto v = integrand(mid + half * rule.nodes[i]);
      acc[0] += half * rule.weights[i] * v[0];
      acc[1] += half * rule.weights[i] * v[1];
    }
    return acc;
  };

  // Oscillation from e^{-il theta} requires nodes growing with |l|.
  const int base = std::max({64, 16 * static_cast<int>(std::ceil(as)), 4 * std::abs(l) + 16});
  const auto coarse = run(base);
  const auto fine = run(2 * base);
  const double scale = std::max({1.0, std::abs(fine[0]), std::abs(fine[1])});
  if (std::abs(coarse[0] - fine[0]) > 1e-10 * scale ||
      std::abs(coarse[1] - fine[1]) > 1e-10 * scale)
    throw accuracy_error("quadrature_amplitudes: refinement disagreement above 1e-10");
  const double norm = 1.0 / (4.0 * wn.k_s * wn.k_s);
  return {norm * fine[0], norm * fine[1]};
}

}  // namespace elastocloak
