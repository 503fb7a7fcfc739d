#pragma once

namespace yaoconn {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Point a, Point b) { return !(a == b); }

// Squared Euclidean distance. This is the canonical comparison key: every
// threshold test and nearest-neighbor decision compares squared values, so
// results do not depend on sqrt rounding.
inline double sq_dist(Point a, Point b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  return dx * dx + dy * dy;
}

double euclid(Point a, Point b);

double l_inf(Point a, Point b);

// 1-based index of the half-open cone around `apex` containing `q`.
// Cone i spans angles [2*pi*(i-1)/k, 2*pi*i/k): the lower bounding ray
// belongs to the cone, the upper one does not; ray 1 points along +x.
// Throws if k < 2 or q coincides with apex.
int cone_of(Point apex, Point q, int k);

// Rhombus distance: write b-a in the oblique basis spanned by the two unit
// rays bounding the cone of b around a, and return the larger coordinate.
// Requires k >= 3 (for k = 2 the bounding rays are collinear and the basis
// degenerates). Symmetry and the Euclidean sandwich
//   |ab| <= d_rhombus(a,b) <= (2/sqrt(3)) |ab|
// are guaranteed for k = 3.
double d_rhombus(Point a, Point b, int k = 3);

struct Transform {
  double rotation = 0.0;  // radians, counterclockwise about the origin
  double dx = 0.0;
  double dy = 0.0;
};

Point apply_transform(Point p, const Transform& t);

}  // namespace yaoconn
