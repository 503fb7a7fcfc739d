#include "yaoconn/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace yaoconn {

double euclid(Point a, Point b) { return std::sqrt(sq_dist(a, b)); }

double l_inf(Point a, Point b) {
  return std::max(std::fabs(b.x - a.x), std::fabs(b.y - a.y));
}

int cone_of(Point apex, Point q, int k) {
  if (k < 2) {
    throw std::invalid_argument("cone_of: need k >= 2, got " + std::to_string(k));
  }
  if (q == apex) {
    throw std::invalid_argument("cone_of: query point coincides with the apex");
  }
  double theta = std::atan2(q.y - apex.y, q.x - apex.x);
  if (theta < 0.0) theta += kTwoPi;
  const double width = kTwoPi / k;
  int i = static_cast<int>(theta / width);
  // A tiny negative atan2 result can round up to exactly 2*pi above; such a
  // direction lies just below ray 1 and belongs to the last cone.
  if (i >= k) i = k - 1;
  return i + 1;
}

double d_rhombus(Point a, Point b, int k) {
  if (k < 3) {
    throw std::invalid_argument("d_rhombus: need k >= 3, got " + std::to_string(k));
  }
  if (a == b) return 0.0;
  const int i = cone_of(a, b, k);
  const double width = kTwoPi / k;
  const double lo = (i - 1) * width;
  const double hi = i * width;
  const double e0x = std::cos(lo), e0y = std::sin(lo);
  const double e1x = std::cos(hi), e1y = std::sin(hi);
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double det = e0x * e1y - e0y * e1x;  // sin(2*pi/k) > 0 for k >= 3
  const double u = (dx * e1y - dy * e1x) / det;
  const double v = (e0x * dy - e0y * dx) / det;
  return std::max(u, v);
}

Point apply_transform(Point p, const Transform& t) {
  const double c = std::cos(t.rotation);
  const double s = std::sin(t.rotation);
  return Point{c * p.x - s * p.y + t.dx, s * p.x + c * p.y + t.dy};
}

}  // namespace yaoconn
