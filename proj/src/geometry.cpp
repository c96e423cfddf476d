#include "glyphgraph/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "glyphgraph/errors.hpp"

namespace glyphgraph {

double normalize_angle_deg(double a) {
  double r = std::fmod(a, 360.0);
  if (r < 0.0) r += 360.0;
  if (r >= 360.0) r = 0.0;  // fmod rounding can land exactly on 360
  return r;
}

double circular_diff_deg(double a, double b) {
  double d = std::fabs(normalize_angle_deg(a) - normalize_angle_deg(b));
  return std::min(d, 360.0 - d);
}

CanonicalDirection canonical_direction(double angle_deg) {
  double a = normalize_angle_deg(angle_deg);
  if (a < 180.0) return {a, false};
  return {a - 180.0, true};
}

Point endpoint_of(const Point& origin, double length, double angle_deg,
                  double unit_scale) {
  if (!std::isfinite(origin.x) || !std::isfinite(origin.y) ||
      !std::isfinite(length) || !std::isfinite(angle_deg) ||
      !std::isfinite(unit_scale)) {
    throw DomainError("endpoint_of: non-finite input");
  }
  if (length < 0.0) {
    throw DomainError("endpoint_of: negative length " +
                      std::to_string(length));
  }
  if (unit_scale <= 0.0) {
    throw DomainError("endpoint_of: unit scale must be positive");
  }
  const double rad = angle_deg * std::numbers::pi / 180.0;
  return {origin.x + length * unit_scale * std::cos(rad),
          origin.y + length * unit_scale * std::sin(rad)};
}

bool approx_eq(double a, double b, const Tolerance& tol, Quantity kind) {
  switch (kind) {
    case Quantity::Coordinate:
    case Quantity::Length:
      return std::fabs(a - b) <= tol.abs_eps;
    case Quantity::Ratio:
      return std::fabs(a - b) <= tol.rel_eps * std::max(std::fabs(a),
                                                        std::fabs(b));
    case Quantity::Angle:
      return circular_diff_deg(a, b) <= tol.angle_eps;
  }
  return false;
}

bool approx_eq(const Point& a, const Point& b, const Tolerance& tol) {
  return approx_eq(a.x, b.x, tol, Quantity::Coordinate) &&
         approx_eq(a.y, b.y, tol, Quantity::Coordinate);
}

}  // namespace glyphgraph
