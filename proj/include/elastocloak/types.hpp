#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace elastocloak {

using cplx = std::complex<double>;
using Vec2c = std::array<cplx, 2>;
using Mat2c = std::array<std::array<cplx, 2>, 2>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx iu{0.0, 1.0};

/// 2D point / vector in the plane.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  double norm() const { return std::hypot(x, y); }

  /// Polar angle mapped into [0, 2*pi).
  double arg() const {
    double a = std::atan2(y, x);
    if (a < 0.0) a += 2.0 * pi;
    if (a >= 2.0 * pi) a = 0.0;
    return a;
  }

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
};

inline Vec2 unit_vec(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// i^q for integer q (exact, no trig round-off).
inline cplx ipow(long q) {
  switch (((q % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline double parity_sign(long n) { return (n % 2 == 0) ? 1.0 : -1.0; }

/// Quadrature or series refinement failed to meet its accuracy target.
class accuracy_error : public std::runtime_error {
 public:
  explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid run configuration; `code` is a stable machine-readable tag.
class config_error : public std::runtime_error {
 public:
  config_error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace elastocloak
