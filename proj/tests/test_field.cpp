#include <catch2/catch_amalgamated.hpp>

#include "elastocloak/field.hpp"
#include "support/oracles.hpp"

using namespace elastocloak;

namespace {
const Material aluminum = material_from_speeds(6427.0, 3112.0, 2694.0);
const WaveNumbers wn = wavenumbers_for(aluminum, FrequencySelector::k_p, 2.0);
const double deg = pi / 180.0;
}  // namespace

TEST_CASE("device displacement basics") {
  const CloakConfig cfg = symmetric_config(3, 1.0);
  SourceAmplitudes zero(cfg.device_count(), 4);
  const Vec2c u = device_displacement(zero, cfg, wn, {0.2, 0.1});
  CHECK(u[0] == cplx{});
  CHECK(u[1] == cplx{});
  CHECK_THROWS_AS(device_displacement(zero, cfg, wn, cfg.arcs[0].center), std::domain_error);
}

TEST_CASE("incident-only grid reproduces the plane wave") {
  const CloakConfig cfg = symmetric_config(3, 1.0);
  const IncidentField f = IncidentField::plane_p(1.0, 7.0 * deg);
  SourceAmplitudes zero(cfg.device_count(), 2);
  const FieldGrid g =
      total_grid(f, zero, cfg, aluminum, wn, {-1.5, 1.5, -1.5, 1.5}, 21, 21);
  CHECK(g.norm_name == "k_p");
  for (int iy : {0, 7, 20})
    for (int ix : {0, 11, 20}) {
      const Vec2 x{g.x_at(ix), g.y_at(iy)};
      const Vec2c ui = incident_displacement(f, wn, x);
      const std::size_t idx = g.index(ix, iy);
      REQUIRE(std::abs(g.ux[idx] - ui[0] / wn.k_p) < 1e-14);
      REQUIRE(std::abs(g.uy[idx] - ui[1] / wn.k_p) < 1e-14);
    }

  // shear runs normalize by k_s
  const FieldGrid gs = total_grid(IncidentField::plane_s(1.0, 0.0), zero, cfg, aluminum, wn,
                                  {-1.0, 1.0, -1.0, 1.0}, 5, 5);
  CHECK(gs.norm_name == "k_s");
  CHECK(gs.norm_k == Catch::Approx(wn.k_s));
}

TEST_CASE("grid evaluation is deterministic and linear") {
  const CloakConfig cfg = symmetric_config(3, 1.0);
  const IncidentField f = IncidentField::plane_p(1.0, 7.0 * deg);
  const SourceAmplitudes B = plane_amplitudes(cfg, aluminum, wn, f, 10);
  const GridBounds bb{-1.2, 1.2, -1.2, 1.2};
  const FieldGrid g1 = total_grid(f, B, cfg, aluminum, wn, bb, 41, 41);
  const FieldGrid g2 = total_grid(f, B, cfg, aluminum, wn, bb, 41, 41);
  REQUIRE(g1.ux == g2.ux);
  REQUIRE(g1.uy == g2.uy);
  REQUIRE(g1.mask == g2.mask);

  const IncidentField f2 = f.scaled(2.0);
  const SourceAmplitudes B2 = plane_amplitudes(cfg, aluminum, wn, f2, 10);
  const FieldGrid g3 = total_grid(f2, B2, cfg, aluminum, wn, bb, 41, 41);
  for (std::size_t i = 0; i < g1.ux.size(); ++i) {
    REQUIRE(g3.ux[i] == 2.0 * g1.ux[i]);
    REQUIRE(g3.uy[i] == 2.0 * g1.uy[i]);
  }
}

TEST_CASE("mask tags follow the geometry") {
  const CloakConfig cfg = symmetric_config(3, 1.0);
  const IncidentField f = IncidentField::plane_p(1.0, 0.0);
  SourceAmplitudes zero(cfg.device_count(), 1);
  const FieldGrid g = total_grid(f, zero, cfg, aluminum, wn, {-2.0, 2.0, -2.0, 2.0}, 81, 81);
  bool saw_cloak = false, saw_device = false, saw_exterior = false;
  for (int iy = 0; iy < g.ny; ++iy)
    for (int ix = 0; ix < g.nx; ++ix) {
      const Vec2 x{g.x_at(ix), g.y_at(iy)};
      const int tag = g.mask[g.index(ix, iy)];
      if (tag == -1) {
        saw_cloak = true;
        REQUIRE(in_cloak(cfg, x));
      } else if (tag > 0) {
        saw_device = true;
        REQUIRE(in_device(cfg, x) == std::optional<std::size_t>(tag - 1));
      } else {
        saw_exterior = true;
      }
    }
  CHECK(saw_cloak);
  CHECK(saw_device);
  CHECK(saw_exterior);
}

TEST_CASE("metrics: incident-only field and coverage errors") {
  const CloakConfig cfg = symmetric_config(3, 1.0);
  const IncidentField f = IncidentField::plane_p(1.0, 7.0 * deg);
  SourceAmplitudes zero(cfg.device_count(), 1);
  const FieldGrid g = total_grid(f, zero, cfg, aluminum, wn, {-2.0, 2.0, -2.0, 2.0}, 101, 101);
  const CloakMetrics m = cloak_metrics(g);
  CHECK(m.exterior_rms_dev == 0.0);
  CHECK(m.cloak_points > 0);

  // with sources off, the cloak carries exactly the incident magnitudes
  double inc_sq = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < g.mask.size(); ++i)
    if (g.mask[i] == -1) {
      inc_sq += std::norm(g.ui_x[i]) + std::norm(g.ui_y[i]);
      ++n;
    }
  CHECK(m.cloak_rms == Catch::Approx(std::sqrt(inc_sq / n)).epsilon(1e-12));

  const FieldGrid far_away =
      total_grid(f, zero, cfg, aluminum, wn, {5.0, 6.0, 5.0, 6.0}, 11, 11);
  CHECK_THROWS_AS(cloak_metrics(far_away), std::domain_error);
}

TEST_CASE("cloak quality improves with the truncation order") {
  const CloakConfig cfg = symmetric_config(3, 1.0);
  const IncidentField f = IncidentField::plane_p(1.0, 7.0 * deg);
  double prev = -1.0;
  for (int N : {5, 10, 20, 50}) {
    const SourceAmplitudes B = plane_amplitudes(cfg, aluminum, wn, f, N);
    const FieldGrid g = total_grid(f, B, cfg, aluminum, wn, {-1.8, 1.8, -1.8, 1.8}, 91, 91);
    const CloakMetrics m = cloak_metrics(g);
    if (prev >= 0.0) REQUIRE(m.cloak_max <= 2.0 * prev);
    prev = m.cloak_max;
  }
}

TEST_CASE("exterior transparency improves with the truncation order") {
  const CloakConfig cfg = symmetric_config(3, 1.0);
  const IncidentField f = IncidentField::plane_p(1.0, 7.0 * deg);
  const SourceAmplitudes B5 = plane_amplitudes(cfg, aluminum, wn, f, 5);
  const SourceAmplitudes B50 = plane_amplitudes(cfg, aluminum, wn, f, 50);
  const GridBounds bb{-1.8, 1.8, -1.8, 1.8};
  const CloakMetrics m5 = cloak_metrics(total_grid(f, B5, cfg, aluminum, wn, bb, 91, 91));
  const CloakMetrics m50 = cloak_metrics(total_grid(f, B50, cfg, aluminum, wn, bb, 91, 91));
  CHECK(m50.exterior_rms_dev <= m5.exterior_rms_dev);
}

TEST_CASE("metrics converge under grid refinement") {
  // The truncated field keeps a residual skin of width ~a/N along the arcs,
  // so the cloak rms converges only as the grid resolves that skin: assert
  // contraction of successive refinements rather than a flat drift bound.
  // The exterior deviation is already stable at these resolutions.
  const CloakConfig cfg = symmetric_config(3, 1.0);
  const IncidentField f = IncidentField::plane_p(1.0, 7.0 * deg);
  const SourceAmplitudes B = plane_amplitudes(cfg, aluminum, wn, f, 10);
  const GridBounds bb{-1.8, 1.8, -1.8, 1.8};
  const CloakMetrics m1 = cloak_metrics(total_grid(f, B, cfg, aluminum, wn, bb, 241, 241));
  const CloakMetrics m2 = cloak_metrics(total_grid(f, B, cfg, aluminum, wn, bb, 481, 481));
  const CloakMetrics m3 = cloak_metrics(total_grid(f, B, cfg, aluminum, wn, bb, 961, 961));
  CHECK(std::abs(m3.cloak_rms - m2.cloak_rms) < std::abs(m2.cloak_rms - m1.cloak_rms));
  CHECK(m2.exterior_rms_dev == Catch::Approx(m1.exterior_rms_dev).epsilon(0.10));
  CHECK(m3.exterior_rms_dev == Catch::Approx(m2.exterior_rms_dev).epsilon(0.10));
}

TEST_CASE("device field is negligible far away when constraints hold") {
  const CloakConfig cfg = symmetric_config(8, 1.0);
  const WaveNumbers w5 = wavenumbers_for(aluminum, FrequencySelector::k_s, 5.0);
  const IncidentField f = IncidentField::plane_p(1.0, 7.0 * deg);
  const SourceAmplitudes B = plane_amplitudes(cfg, aluminum, w5, f, 100);
  for (double ang : {0.3, 2.0, 4.4}) {
    const Vec2 x = unit_vec(ang) * 10.0;
    const Vec2c ud = device_displacement(B, cfg, w5, x);
    const Vec2c ui = incident_displacement(f, w5, x);
    const double si = std::max(std::abs(ui[0]), std::abs(ui[1]));
    REQUIRE(std::max(std::abs(ud[0]), std::abs(ud[1])) < 1e-3 * si);
  }
}
