#ifndef GLYPHGRAPH_GEOMETRY_HPP
#define GLYPHGRAPH_GEOMETRY_HPP

namespace glyphgraph {

// A point in abstract drawing units.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Comparison tolerances shared by every module. All angles are degrees.
struct Tolerance {
  double abs_eps = 1e-9;    // coordinates and lengths
  double rel_eps = 1e-6;    // ratios
  double angle_eps = 1e-6;  // degrees, compared on the circle
};

// What a pair of reals means when comparing them.
enum class Quantity { Coordinate, Length, Ratio, Angle };

// Reduces an angle to [0, 360).
double normalize_angle_deg(double a);

// Distance between two angles on the circle, in [0, 180].
double circular_diff_deg(double a, double b);

// Direction of a line reduced to [0, 180); `flipped` reports whether the
// orientation was inverted. Exactly 180 maps to (0, flipped).
struct CanonicalDirection {
  double angle_deg = 0.0;
  bool flipped = false;
};
CanonicalDirection canonical_direction(double angle_deg);

// Second endpoint of a segment from `origin` with polar data
// (length * unit_scale, angle in degrees). Throws DomainError on
// non-finite input, negative length or non-positive unit scale.
Point endpoint_of(const Point& origin, double length, double angle_deg,
                  double unit_scale = 1.0);

bool approx_eq(double a, double b, const Tolerance& tol, Quantity kind);
bool approx_eq(const Point& a, const Point& b, const Tolerance& tol);

}  // namespace glyphgraph

#endif  // GLYPHGRAPH_GEOMETRY_HPP
