#include <catch2/catch_amalgamated.hpp>

#include "elastocloak/geometry.hpp"
#include "support/oracles.hpp"

using namespace elastocloak;

TEST_CASE("symmetric layout, default tangent radius") {
  const CloakConfig c4 = symmetric_config(4, 1.0);
  REQUIRE(c4.device_count() == 4);
  CHECK(c4.symmetric->disk_radius == Catch::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
  for (int m = 0; m < 4; ++m) {
    CHECK(c4.arcs[m].center.arg() == Catch::Approx(0.5 * pi * m).margin(1e-15));
    CHECK(c4.arcs[m].center.norm() == Catch::Approx(1.0).epsilon(1e-15));
  }
  CHECK(c4.arcs[0].theta1 == Catch::Approx(0.75 * pi).epsilon(1e-14));
  CHECK(c4.arcs[0].theta2 == Catch::Approx(1.25 * pi).epsilon(1e-14));

  const CloakConfig c3 = symmetric_config(3, 1.0);
  CHECK(c3.symmetric->disk_radius == Catch::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  CHECK(c3.tangent_symmetric());

  // adjacent disks touch: |x_m - x_{m+1}| = 2a
  for (int m = 0; m < 3; ++m) {
    const Vec2 d = c3.arcs[m].center - c3.arcs[(m + 1) % 3].center;
    CHECK(d.norm() == Catch::Approx(2.0 * c3.symmetric->disk_radius).epsilon(1e-12));
  }
}

TEST_CASE("geometry validation") {
  CHECK_THROWS_AS(symmetric_config(2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_config(4, 1.0, 0.5), std::invalid_argument);   // below tangency
  CHECK_THROWS_AS(symmetric_config(4, 1.0, 1.0), std::invalid_argument);   // >= ring radius
  CHECK_NOTHROW(symmetric_config(4, 1.0, 0.8));
}

TEST_CASE("membership tests") {
  const CloakConfig cfg = symmetric_config(4, 1.0);
  const double a = cfg.symmetric->disk_radius;

  CHECK(in_cloak(cfg, {0.0, 0.0}));
  CHECK_FALSE(in_cloak(cfg, cfg.arcs[0].center));
  // radius b between two adjacent devices lies outside the cloak
  CHECK_FALSE(in_cloak(cfg, unit_vec(pi / 4.0)));
  // cusp point at radius b cos(pi/M) belongs to the closed cloak
  CHECK(in_cloak(cfg, unit_vec(pi / 4.0) * std::cos(pi / 4.0)));

  CHECK(in_device(cfg, cfg.arcs[1].center) == std::optional<std::size_t>{1});
  CHECK_FALSE(in_device(cfg, {0.0, 0.0}).has_value());
  // boundary points are not inside (strict inequality)
  const Vec2 boundary = cfg.arcs[0].center + Vec2{-a, 0.0};
  CHECK_FALSE(in_device(cfg, boundary).has_value());

  // cloak membership implies no device membership; invariant under 2pi/M rotation
  for (int rep = 0; rep < 200; ++rep) {
    const Vec2 x{oracles::uniform(-1.2, 1.2), oracles::uniform(-1.2, 1.2)};
    if (in_cloak(cfg, x)) CHECK_FALSE(in_device(cfg, x).has_value());
    const double c = std::cos(pi / 2.0), s = std::sin(pi / 2.0);
    const Vec2 xr{c * x.x - s * x.y, s * x.x + c * x.y};
    REQUIRE(in_cloak(cfg, x) == in_cloak(cfg, xr));
  }

  CloakConfig loose = symmetric_config(4, 1.0, 0.8);
  CHECK_THROWS_AS(in_cloak(loose, {0.0, 0.0}), std::domain_error);
  CloakConfig manual;
  manual.arcs.push_back({{1.0, 0.0}, 0.5, 0.5 * pi, 1.5 * pi});
  CHECK_THROWS_AS(in_cloak(manual, {0.0, 0.0}), std::domain_error);
}

TEST_CASE("arc span unwraps the angle branch") {
  SourceArc wrapped{{0.0, 0.0}, 1.0, 1.75 * pi, 0.25 * pi};
  CHECK(wrapped.span() == Catch::Approx(0.5 * pi).epsilon(1e-14));
  SourceArc plain{{0.0, 0.0}, 1.0, 0.75 * pi, 1.25 * pi};
  CHECK(plain.span() == Catch::Approx(0.5 * pi).epsilon(1e-14));
}
