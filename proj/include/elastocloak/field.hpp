#pragma once

#include <limits>
#include <vector>

#include "elastocloak/diagnostics.hpp"

namespace elastocloak {

/// Device (active) displacement at x: gradients of the multipole potentials,
/// truncated at |n| <= B.l_max. Singular at the source centers.
inline Vec2c device_displacement(const SourceAmplitudes& B, const CloakConfig& cfg,
                                 const WaveNumbers& wn, Vec2 x) {
  if (B.device_count != cfg.device_count())
    throw std::invalid_argument("device_displacement: amplitudes do not match configuration");
  Vec2c u{};
  const int N = B.l_max;
  for (std::size_t m = 0; m < cfg.device_count(); ++m) {
    const Vec2 z = x - cfg.arcs[m].center;
    const double r = z.norm();
    if (r == 0.0) throw std::domain_error("device_displacement: evaluation at a source center");
    const double ct = std::cos(z.arg()), st = std::sin(z.arg());
    CylField hp(CylField::Kind::H, wn.k_p, z, N + 1);
    CylField hs(CylField::Kind::H, wn.k_s, z, N + 1);
    for (int n = -N; n <= N; ++n) {
      const cplx bp = B.Bp(m, n), bs = B.Bs(m, n);
      if (bp != cplx{}) {
        const cplx f = hp.F(n), fr = hp.Fr(n);
        const cplx ang = iu * static_cast<double>(n) * f / r;
        u[0] += bp * (wn.k_p * ct * fr - st * ang);
        u[1] += bp * (wn.k_p * st * fr + ct * ang);
      }
      if (bs != cplx{}) {
        const cplx f = hs.F(n), fr = hs.Fr(n);
        const cplx ang = iu * static_cast<double>(n) * f / r;
        u[0] += bs * (wn.k_s * st * fr + ct * ang);
        u[1] += bs * (-wn.k_s * ct * fr + st * ang);
      }
    }
  }
  return u;
}

struct GridBounds {
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
};

/// Sampled total displacement, normalized by k_p (compressional/combined/
/// general runs) or k_s (shear runs). Mask: 0 exterior, -1 cloak (tangent
/// symmetric configs only), m >= 1 device disk m. Device-disk values are
/// computed and kept, not clipped; exact source centers store +inf.
struct FieldGrid {
  GridBounds bounds;
  int nx = 0, ny = 0;
  double norm_k = 1.0;
  std::string norm_name = "k_p";
  std::vector<cplx> ux, uy;      // total field / norm_k
  std::vector<cplx> ui_x, ui_y;  // incident field / norm_k
  std::vector<int> mask;

  std::size_t index(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx) +
           static_cast<std::size_t>(ix);
  }
  double x_at(int ix) const {
    return nx == 1 ? bounds.x_min
                   : bounds.x_min + ix * (bounds.x_max - bounds.x_min) / (nx - 1);
  }
  double y_at(int iy) const {
    return ny == 1 ? bounds.y_min
                   : bounds.y_min + iy * (bounds.y_max - bounds.y_min) / (ny - 1);
  }
};

inline FieldGrid total_grid(const IncidentField& field, const SourceAmplitudes& B,
                            const CloakConfig& cfg, const Material& /*mat*/,
                            const WaveNumbers& wn, GridBounds bounds, int nx, int ny) {
  if (nx < 2 || ny < 2) throw std::invalid_argument("total_grid: resolution must be >= 2x2");
  if (!(bounds.x_max > bounds.x_min) || !(bounds.y_max > bounds.y_min))
    throw std::invalid_argument("total_grid: degenerate bounds");

  FieldGrid g;
  g.bounds = bounds;
  g.nx = nx;
  g.ny = ny;
  if (field.kind() == IncidentField::Kind::plane_s) {
    g.norm_k = wn.k_s;
    g.norm_name = "k_s";
  } else {
    g.norm_k = wn.k_p;
    g.norm_name = "k_p";
  }
  const std::size_t total = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
  g.ux.resize(total);
  g.uy.resize(total);
  g.ui_x.resize(total);
  g.ui_y.resize(total);
  g.mask.resize(total);

  const bool tagged_cloak = cfg.tangent_symmetric();
  const double inf = std::numeric_limits<double>::infinity();
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const Vec2 x{g.x_at(ix), g.y_at(iy)};
      const std::size_t idx = g.index(ix, iy);

      int tag = 0;
      if (auto dev = in_device(cfg, x))
        tag = static_cast<int>(*dev) + 1;
      else if (tagged_cloak && in_cloak(cfg, x))
        tag = -1;
      g.mask[idx] = tag;

      const Vec2c ui = incident_displacement(field, wn, x);
      g.ui_x[idx] = ui[0] / g.norm_k;
      g.ui_y[idx] = ui[1] / g.norm_k;

      bool at_center = false;
      for (const auto& arc : cfg.arcs)
        if ((x - arc.center).norm() == 0.0) at_center = true;
      if (at_center) {
        g.ux[idx] = cplx{inf, 0.0};
        g.uy[idx] = cplx{inf, 0.0};
        continue;
      }
      const Vec2c ud = device_displacement(B, cfg, wn, x);
      g.ux[idx] = (ud[0] + ui[0]) / g.norm_k;
      g.uy[idx] = (ud[1] + ui[1]) / g.norm_k;
    }
  }
  return g;
}

/// Cloaking quality summary over a sampled grid.
struct CloakMetrics {
  double cloak_max = 0.0;        // max |u| over cloak-tagged points
  double cloak_rms = 0.0;        // rms |u| over cloak-tagged points
  double exterior_rms_dev = 0.0; // rms |u - u_i| / rms |u_i| over exterior
  double device_max = 0.0;       // max |u| over device-tagged points (reported only)
  std::size_t cloak_points = 0;
  std::size_t exterior_points = 0;
};

inline CloakMetrics cloak_metrics(const FieldGrid& g) {
  CloakMetrics mtr;
  double cloak_sq = 0.0, ext_dev_sq = 0.0, ext_inc_sq = 0.0;
  for (std::size_t i = 0; i < g.mask.size(); ++i) {
    const double mag2 = std::norm(g.ux[i]) + std::norm(g.uy[i]);
    if (g.mask[i] == -1) {
      ++mtr.cloak_points;
      cloak_sq += mag2;
      mtr.cloak_max = std::max(mtr.cloak_max, std::sqrt(mag2));
    } else if (g.mask[i] == 0) {
      ++mtr.exterior_points;
      ext_dev_sq += std::norm(g.ux[i] - g.ui_x[i]) + std::norm(g.uy[i] - g.ui_y[i]);
      ext_inc_sq += std::norm(g.ui_x[i]) + std::norm(g.ui_y[i]);
    } else {
      mtr.device_max = std::max(mtr.device_max, std::sqrt(mag2));
    }
  }
  if (mtr.cloak_points == 0 || mtr.exterior_points == 0)
    throw std::domain_error("cloak_metrics: insufficient coverage of cloak/exterior regions");
  mtr.cloak_rms = std::sqrt(cloak_sq / mtr.cloak_points);
  mtr.exterior_rms_dev = std::sqrt(ext_dev_sq / std::max(ext_inc_sq, 1e-300));
  return mtr;
}

}  // namespace elastocloak
