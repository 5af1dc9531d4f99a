#pragma once

#include "elastocloak/types.hpp"
#include "elastocloak/wavefun.hpp"

namespace elastocloak {

/// Isotropic elastic medium; kappa = c_p/c_s = k_s/k_p.
struct Material {
  double lambda = 0.0;  // Pa
  double mu = 0.0;      // Pa
  double rho = 0.0;     // kg/m^3
  double c_p = 0.0;     // m/s
  double c_s = 0.0;     // m/s
  double nu = 0.0;      // plane-strain Poisson ratio
  double kappa = 0.0;
};

struct WaveNumbers {
  double omega = 0.0;  // rad/s
  double k_p = 0.0;    // 1/m
  double k_s = 0.0;    // 1/m
};

namespace detail {
inline Material finish_material(double lambda, double mu, double rho) {
  if (mu <= 0.0 || lambda + 2.0 * mu <= 0.0 || rho <= 0.0)
    throw std::invalid_argument("material: need mu > 0, lambda + 2 mu > 0, rho > 0");
  Material m;
  m.lambda = lambda;
  m.mu = mu;
  m.rho = rho;
  m.c_p = std::sqrt((lambda + 2.0 * mu) / rho);
  m.c_s = std::sqrt(mu / rho);
  m.nu = lambda / (2.0 * (lambda + mu));
  if (m.nu >= 0.4999)
    throw std::invalid_argument("material: Poisson ratio too close to 1/2 (kappa diverges)");
  m.kappa = m.c_p / m.c_s;
  return m;
}
}  // namespace detail

inline Material material_from_speeds(double c_p, double c_s, double rho) {
  if (c_s <= 0.0 || !(c_p > c_s * std::sqrt(4.0 / 3.0)))
    throw std::invalid_argument("material: wave speeds must satisfy c_p > c_s*sqrt(4/3), c_s > 0");
  return detail::finish_material(rho * (c_p * c_p - 2.0 * c_s * c_s), rho * c_s * c_s, rho);
}

inline Material material_from_lame(double lambda, double mu, double rho) {
  return detail::finish_material(lambda, mu, rho);
}

enum class FrequencySelector { omega, k_p, k_s };

/// Derive (omega, k_p, k_s) from a single positive selector value.
inline WaveNumbers wavenumbers_for(const Material& m, FrequencySelector sel, double value) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw std::invalid_argument("wavenumbers_for: selector value must be positive");
  WaveNumbers w;
  switch (sel) {
    case FrequencySelector::omega: w.omega = value; break;
    case FrequencySelector::k_p: w.omega = value * m.c_p; break;
    case FrequencySelector::k_s: w.omega = value * m.c_s; break;
  }
  w.k_p = w.omega / m.c_p;
  w.k_s = w.omega / m.c_s;
  return w;
}

/// In-plane elastodynamic point-force tensor
///   G_ik = (rho w^2)^{-1} [delta_ik k_s^2 G_s + d_i d_k (G_s - G_p)],
/// G_a = (1/4i) H_0(k_a |x|), derivatives taken in closed form.
inline Mat2c green_tensor(const Material& m, const WaveNumbers& wn, Vec2 x) {
  if (x.norm() == 0.0) throw std::domain_error("green_tensor: singular at x = 0");
  const double rw2 = m.rho * wn.omega * wn.omega;
  const cplx c = 1.0 / (4.0 * iu);
  CylField hs(CylField::Kind::H, wn.k_s, x, 3);
  CylField hp(CylField::Kind::H, wn.k_p, x, 3);
  const cplx gs0 = c * hs.F(0);
  const Mat2c Hs = hs.hessian(0), Hp = hp.hessian(0);
  Mat2c g;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      cplx v = c * (Hs[i][k] - Hp[i][k]);
      if (i == k) v += wn.k_s * wn.k_s * gs0;
      g[i][k] = v / rw2;
    }
  return g;
}

/// Traction kernel S_ijk = lambda delta_ij G_pk,p + mu (G_ik,j + G_jk,i),
/// i.e. C_ijpq G_pk,q for the isotropic stiffness.
struct TractionKernel {
  std::array<std::array<std::array<cplx, 2>, 2>, 2> s{};  // [i][j][k]
};

inline TractionKernel green_traction(const Material& m, const WaveNumbers& wn, Vec2 x) {
  if (x.norm() == 0.0) throw std::domain_error("green_traction: singular at x = 0");
  const double rw2 = m.rho * wn.omega * wn.omega;
  const cplx c = 1.0 / (4.0 * iu);
  CylField hs(CylField::Kind::H, wn.k_s, x, 4);
  CylField hp(CylField::Kind::H, wn.k_p, x, 4);

  const Vec2c ds = hs.grad(0);
  const auto ts = hs.third(0), tp = hp.third(0);  // {xxx, xxy, xyy, yyy}
  auto t3 = [](const std::array<cplx, 4>& t, int a, int b, int c3) {
    const int ny = (a == 1) + (b == 1) + (c3 == 1);
    return t[ny];
  };

  // dg[q][i][k] = d/dx_q G_ik
  std::array<std::array<std::array<cplx, 2>, 2>, 2> dg{};
  for (int q = 0; q < 2; ++q)
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) {
        cplx v = c * (t3(ts, q, i, k) - t3(tp, q, i, k));
        if (i == k) v += wn.k_s * wn.k_s * c * ds[q];
        dg[q][i][k] = v / rw2;
      }

  TractionKernel out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        cplx v = m.mu * (dg[j][i][k] + dg[i][j][k]);
        if (i == j) v += m.lambda * (dg[0][0][k] + dg[1][1][k]);
        out.s[i][j][k] = v;
      }
  return out;
}

}  // namespace elastocloak
