#pragma once

#include <optional>
#include <vector>

#include "elastocloak/types.hpp"

namespace elastocloak {

/// One active device: disk of radius `radius` around `center`, carrying the
/// boundary arc traversed counterclockwise from theta1 to theta2. Angles are
/// stored in [0, 2*pi); theta2 < theta1 means the traversal wraps past 2*pi.
struct SourceArc {
  Vec2 center;
  double radius = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;

  /// Positive arc length in angle, unwrapping theta2 < theta1 by +2*pi.
  double span() const {
    double s = theta2 - theta1;
    if (s <= 0.0) s += 2.0 * pi;
    return s;
  }
};

struct SymmetricSpec {
  int device_count = 0;
  double ring_radius = 0.0;  // b
  double disk_radius = 0.0;  // a
};

struct CloakConfig {
  std::vector<SourceArc> arcs;
  std::optional<SymmetricSpec> symmetric;

  std::size_t device_count() const { return arcs.size(); }

  bool tangent_symmetric() const {
    if (!symmetric) return false;
    const double lb = symmetric->ring_radius * std::sin(pi / symmetric->device_count);
    return std::abs(symmetric->disk_radius - lb) <= 1e-12 * symmetric->disk_radius;
  }
};

namespace detail {
inline double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * pi);
  if (a < 0.0) a += 2.0 * pi;
  return a;
}
}  // namespace detail

/// M devices spread evenly on a circle of radius b; default disk radius is the
/// adjacent-tangency value b*sin(pi/M). Arc endpoints are the intersection
/// points of neighbouring device circles, which requires b*sin(pi/M) <= a < b.
inline CloakConfig symmetric_config(int device_count, double ring_radius,
                                    std::optional<double> disk_radius = std::nullopt) {
  if (device_count < 3)
    throw std::invalid_argument("symmetric_config: need at least three devices");
  if (!(ring_radius > 0.0))
    throw std::invalid_argument("symmetric_config: ring radius must be positive");
  const double lower = ring_radius * std::sin(pi / device_count);
  const double a = disk_radius.value_or(lower);
  if (a < lower * (1.0 - 1e-12))
    throw std::invalid_argument("symmetric_config: disk radius below adjacent tangency");
  if (a >= ring_radius)
    throw std::invalid_argument("symmetric_config: disk radius must stay below ring radius");

  CloakConfig cfg;
  cfg.symmetric = SymmetricSpec{device_count, ring_radius, a};
  const double half = std::abs(std::asin(std::min(1.0, lower / a)) - pi / device_count);
  for (int m = 0; m < device_count; ++m) {
    const double beta = 2.0 * pi * m / device_count;
    SourceArc arc;
    arc.center = unit_vec(beta) * ring_radius;
    arc.radius = a;
    arc.theta1 = detail::wrap_angle(pi + beta - half);
    arc.theta2 = detail::wrap_angle(pi + beta + half);
    cfg.arcs.push_back(arc);
  }
  return cfg;
}

/// Strict-interior device membership: smallest index m with |x - x_m| < a_m.
inline std::optional<std::size_t> in_device(const CloakConfig& cfg, Vec2 x) {
  for (std::size_t m = 0; m < cfg.arcs.size(); ++m)
    if ((x - cfg.arcs[m].center).norm() < cfg.arcs[m].radius) return m;
  return std::nullopt;
}

/// Membership in the cloaked region (tangent symmetric configuration only):
/// |x| <= b*cos(pi/M) and outside every device disk. Arc points belong to the
/// cloak, device disks are open.
inline bool in_cloak(const CloakConfig& cfg, Vec2 x) {
  if (!cfg.tangent_symmetric())
    throw std::domain_error("in_cloak: supported only for the symmetric tangent configuration");
  const auto& s = *cfg.symmetric;
  if (x.norm() > s.ring_radius * std::cos(pi / s.device_count)) return false;
  for (const auto& arc : cfg.arcs)
    if ((x - arc.center).norm() < arc.radius) return false;
  return true;
}

}  // namespace elastocloak
