#include <catch2/catch_amalgamated.hpp>

#include "elastocloak/bessel.hpp"
#include "support/oracles.hpp"

using namespace elastocloak;

TEST_CASE("zero argument gives the Kronecker column") {
  const BesselSeq s = bessel_sequences(0.0, 3);
  CHECK(s.j == std::vector<double>{1.0, 0.0, 0.0, 0.0});
  CHECK_FALSE(s.has_y());
  CHECK_THROWS_AS(s.Y(0), std::domain_error);
}

TEST_CASE("values against the series and integral oracles") {
  const BesselSeq s1 = bessel_sequences(1.0, 2);
  CHECK(s1.J(0) == Catch::Approx(oracles::series_j(0, 1.0)).epsilon(1e-14));
  CHECK(s1.J(1) == Catch::Approx(oracles::series_j(1, 1.0)).epsilon(1e-14));
  CHECK(s1.J(0) == Catch::Approx(0.7651976866).margin(1e-10));
  CHECK(s1.J(1) == Catch::Approx(0.4400505857).margin(1e-10));
  CHECK(s1.Y(0) == Catch::Approx(oracles::quad_y(0, 1.0)).margin(1e-12));
  CHECK(s1.Y(0) == Catch::Approx(0.0882569642).margin(1e-10));

  for (double x : {0.3, 2.7, 7.9, 14.0, 33.0, 59.0}) {
    const BesselSeq s = bessel_sequences(x, 30);
    for (int n : {0, 1, 5, 17, 30}) {
      CHECK(s.J(n) == Catch::Approx(oracles::quad_j(n, x)).margin(2e-13));
    }
    CHECK(s.Y(0) == Catch::Approx(oracles::quad_y(0, x)).margin(2e-12 * (1.0 + std::abs(s.Y(0)))));
    CHECK(s.Y(1) == Catch::Approx(oracles::quad_y(1, x)).margin(2e-12 * (1.0 + std::abs(s.Y(1)))));
  }
}

TEST_CASE("Wronskian and recurrence invariants over the working box") {
  for (double x : {0.05, 0.5, 1.0, 2.0, 4.9, 5.1, 8.0, 12.0, 20.0, 35.0, 50.0, 60.0}) {
    const int order_max = 125;
    const BesselSeq s = bessel_sequences(x, order_max);
    const double w_exact = 2.0 / (pi * x);
    for (int n = 0; n + 1 <= order_max; ++n) {
      if (!std::isfinite(s.Y(n + 1))) break;  // upward Y overflow past the IEEE range
      // J_n Y_n' - J_n' Y_n recast through the cross product at adjacent orders
      const double w = s.J(n + 1) * s.Y(n) - s.J(n) * s.Y(n + 1);
      REQUIRE_THAT(w, Catch::Matchers::WithinRel(w_exact, 1e-12));
    }
    for (int n = 1; n + 1 <= order_max; ++n) {
      const double res = s.J(n - 1) + s.J(n + 1) - (2.0 * n / x) * s.J(n);
      REQUIRE(std::abs(res) <= 1e-12 * std::max(1.0, std::abs(s.J(n))));
    }
  }
}

TEST_CASE("derivatives and the reflection rule") {
  const BesselSeq s1 = bessel_sequences(1.0, 2);
  CHECK(cyl_derivative(s1, CylKind::J, 0) == Catch::Approx(-s1.J(1)).epsilon(1e-15));
  CHECK(cyl_derivative(s1, CylKind::Y, 0) == Catch::Approx(-s1.Y(1)).epsilon(1e-15));

  // central difference of the series oracle at x = 2
  const BesselSeq s2 = bessel_sequences(2.0, 3);
  const double fd =
      (oracles::series_j(1, 2.0 + 1e-6) - oracles::series_j(1, 2.0 - 1e-6)) / 2e-6;
  CHECK(cyl_derivative(s2, CylKind::J, 1) == Catch::Approx(fd).margin(1e-8));
  CHECK(cyl_derivative(s2, CylKind::J, 1) ==
        Catch::Approx(0.5 * (s2.J(0) - s2.J(2))).epsilon(1e-15));

  // negative orders pick up the parity sign
  const BesselSeq s4 = bessel_sequences(2.0, 4);
  CHECK(s4.J(-3) == Catch::Approx(-s4.J(3)).epsilon(1e-15));
  CHECK(cyl_derivative(s4, CylKind::J, -3) ==
        Catch::Approx(-cyl_derivative(s4, CylKind::J, 3)).epsilon(1e-15));

  CHECK_THROWS_AS(cyl_derivative(s2, CylKind::J, 3), std::out_of_range);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(bessel_sequences(-1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(bessel_sequences(std::nan(""), 3), std::invalid_argument);
  CHECK_THROWS_AS(bessel_sequences(1.0, -1), std::invalid_argument);
}
