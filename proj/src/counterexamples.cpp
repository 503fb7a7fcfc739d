#include "yaoconn/counterexamples.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "yaoconn/graphs.hpp"

namespace yaoconn {

namespace {

constexpr double kMinMargin = 1e-6;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void check_alpha(const char* family, double alpha) {
  if (!(alpha >= 1e-8 && alpha <= 0.05)) {
    throw std::invalid_argument(std::string(family) +
                                ": alpha must lie in [1e-8, 0.05], got " + fmt(alpha));
  }
}

void check_chain_length(const char* family, int r) {
  if (r < 1) {
    throw std::invalid_argument(std::string(family) + ": chain length r must be >= 1, got " +
                                std::to_string(r));
  }
}

// Throws unless lhs exceeds rhs by at least kMinMargin.
void require_margin(const char* family, const char* inequality, double lhs, double rhs) {
  if (!(lhs - rhs >= kMinMargin)) {
    throw std::invalid_argument(std::string(family) + ": required inequality '" + inequality +
                                "' holds only with margin " + fmt(lhs - rhs) +
                                " (need >= 1e-6); adjust d, eps, or alpha");
  }
}

void require_cone(const char* family, const PointSet& s, int apex, int q, int k, int expect) {
  const int got = cone_of(s[apex], s[q], k);
  if (got != expect) {
    throw std::invalid_argument(std::string(family) + ": point '" + s.label(q) +
                                "' landed in cone " + std::to_string(got) + " of '" +
                                s.label(apex) + "', expected cone " + std::to_string(expect));
  }
}

// Edges of intended length exactly 1 (pq and the unit chain steps) must
// survive the `sq_dist <= 1` test of the unit disk graph, but rounding can
// land the computed squared length one ulp above 1. Pull b toward a by ulps
// until the computed gap fits; the motion is O(1e-16) and cannot disturb any
// inequality holding with margin 1e-6.
void clamp_gap(const Point& a, Point& b, double cap_sq) {
  while (sq_dist(a, b) > cap_sq) {
    b.x = std::nextafter(b.x, a.x);
    b.y = std::nextafter(b.y, a.y);
  }
}

// Shared layout of the y4/y2 construction: p at the origin, q above it at
// unit distance tilted left by alpha/2, the a-chain on the leftward ray from
// p rotated clockwise by alpha, and each b_i symmetric to a_i about the
// midpoint of pq.
PointSet build_two_chain_set(double eps, double alpha, int r) {
  const Point p{0.0, 0.0};
  Point q{-std::sin(alpha / 2.0), std::cos(alpha / 2.0)};
  clamp_gap(p, q, 1.0);
  const double ux = std::cos(kPi - alpha);
  const double uy = std::sin(kPi - alpha);

  std::vector<Point> pts;
  std::vector<std::string> labels;
  pts.reserve(2 * r + 2);
  labels.reserve(2 * r + 2);
  pts.push_back(p);
  labels.push_back("p");
  pts.push_back(q);
  labels.push_back("q");
  for (int i = 1; i <= r; ++i) {
    const double dist = (1.0 - eps) + (i - 1);
    Point a{dist * ux, dist * uy};
    if (i > 1) clamp_gap(pts.back(), a, 1.0);
    pts.push_back(a);
    labels.push_back("a" + std::to_string(i));
  }
  for (int i = 1; i <= r; ++i) {
    const Point& a = pts[1 + i];
    Point b{p.x + q.x - a.x, p.y + q.y - a.y};
    if (i > 1) clamp_gap(pts.back(), b, 1.0);
    pts.push_back(b);
    labels.push_back("b" + std::to_string(i));
  }
  return PointSet(std::move(pts), std::move(labels));
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::y4_lower: return "y4-lb";
    case Family::y3_lower: return "y3-lb";
    case Family::y2_lower: return "y2-lb";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "y4-lb") return Family::y4_lower;
  if (name == "y3-lb") return Family::y3_lower;
  if (name == "y2-lb") return Family::y2_lower;
  return std::nullopt;
}

double y4_eps_upper(double d) { return 1.0 - std::sqrt(d * d - 1.0); }

double y3_eps_lower(double d) { return d - 1.0; }

double y3_eps_upper(double d) { return 2.0 - (2.0 / 3.0) * std::sqrt(9.0 * d - 1.0); }

double y3_eps_feasible_upper(double d) {
  return 2.0 - (2.0 / 3.0) * std::sqrt(9.0 * d * d - 1.0);
}

double y3_d_feasible_upper() { return (4.0 / 9.0) * std::sqrt(21.0) - 1.0; }

PointSet gen_y4_lower(const ConstructionParams& params) {
  const double d = params.d;
  if (!(d >= 1.0 && d < std::sqrt(2.0))) {
    throw std::invalid_argument("y4-lb: d must satisfy 1 <= d < sqrt(2), got " + fmt(d));
  }
  const ConstructionParams rp = resolved_params(Family::y4_lower, params);
  const double hi = y4_eps_upper(d);
  const double eps = *rp.eps;
  if (!(eps > 0.0 && eps < hi)) {
    throw std::invalid_argument("y4-lb: eps must lie in (0, 1 - sqrt(d^2 - 1)) = (0, " +
                                fmt(hi) + "), got " + fmt(eps));
  }
  check_alpha("y4-lb", params.alpha);
  const int r = *rp.r;
  check_chain_length("y4-lb", r);

  PointSet s = build_two_chain_set(eps, params.alpha, r);
  const Point p = s[0], q = s[1], a1 = s[2], b1 = s[2 + r];
  require_cone("y4-lb", s, 0, 1, 4, 2);      // q in cone 2 of p
  require_cone("y4-lb", s, 1, 0, 4, 4);      // p in cone 4 of q
  require_cone("y4-lb", s, 0, 2, 4, 2);      // a1 in cone 2 of p
  require_cone("y4-lb", s, 1, 2 + r, 4, 4);  // b1 in cone 4 of q
  require_margin("y4-lb", "|p a1| < |p q|", euclid(p, q), euclid(p, a1));
  require_margin("y4-lb", "|q b1| < |q p|", euclid(q, p), euclid(q, b1));
  require_margin("y4-lb", "|a1 q| > d", euclid(a1, q), d);
  require_margin("y4-lb", "|p b1| > d", euclid(p, b1), d);
  return s;
}

PointSet gen_y2_lower(const ConstructionParams& params) {
  const double d = params.d;
  if (!(d >= 1.0)) {
    throw std::invalid_argument("y2-lb: d must satisfy d >= 1, got " + fmt(d));
  }
  const double eps = params.eps.value_or(0.5);
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("y2-lb: eps must lie in (0, 1), got " + fmt(eps));
  }
  check_alpha("y2-lb", params.alpha);
  ConstructionParams checked = params;
  checked.eps = eps;
  const ConstructionParams rp = resolved_params(Family::y2_lower, checked);
  const int r_min = y2_min_chain_length(d, eps, params.alpha);
  const int r = *rp.r;
  check_chain_length("y2-lb", r);
  if (r < r_min) {
    throw std::invalid_argument("y2-lb: r = " + std::to_string(r) +
                                " is too small for d = " + fmt(d) +
                                "; the minimal admissible r is " + std::to_string(r_min));
  }

  PointSet s = build_two_chain_set(eps, params.alpha, r);
  const Point p = s[0], q = s[1], a1 = s[2], ar = s[1 + r], b1 = s[2 + r], br = s[1 + 2 * r];
  require_cone("y2-lb", s, 0, 1, 2, 1);          // q in cone 1 of p
  require_cone("y2-lb", s, 0, 2, 2, 1);          // a1 in cone 1 of p
  require_cone("y2-lb", s, 1, 0, 2, 2);          // p in cone 2 of q
  require_cone("y2-lb", s, 1, 2 + r, 2, 2);      // b1 in cone 2 of q
  require_margin("y2-lb", "|p a1| < |p q|", euclid(p, q), euclid(p, a1));
  require_margin("y2-lb", "|q b1| < |q p|", euclid(q, p), euclid(q, b1));
  require_margin("y2-lb", "|a_r q| > d", euclid(ar, q), d);
  require_margin("y2-lb", "|b_r p| > d", euclid(br, p), d);
  return s;
}

ConstructionParams resolved_params(Family f, ConstructionParams p) {
  if (!p.eps) {
    switch (f) {
      case Family::y4_lower: p.eps = 0.5 * y4_eps_upper(p.d); break;
      case Family::y3_lower: p.eps = 0.5 * (y3_eps_lower(p.d) + y3_eps_upper(p.d)); break;
      case Family::y2_lower: p.eps = 0.5; break;
    }
  }
  if (!p.r) {
    p.r = f == Family::y2_lower ? y2_min_chain_length(p.d, *p.eps, p.alpha) : 3;
  }
  return p;
}

int y2_min_chain_length(double d, double eps, double alpha) {
  const Point p{0.0, 0.0};
  const Point q{-std::sin(alpha / 2.0), std::cos(alpha / 2.0)};
  const double ux = std::cos(kPi - alpha);
  const double uy = std::sin(kPi - alpha);
  const int r_cap = static_cast<int>(std::ceil(d)) + 3;
  for (int r = 1; r <= r_cap; ++r) {
    const double dist = (1.0 - eps) + (r - 1);
    const Point ar{dist * ux, dist * uy};
    const Point br{p.x + q.x - ar.x, p.y + q.y - ar.y};
    if (euclid(ar, q) > d && euclid(br, p) > d) return r;
  }
  throw std::logic_error("y2-lb: no separating chain length below the search cap");
}

PointSet gen_y3_lower(const ConstructionParams& params) {
  const double d = params.d;
  const double d_hi = 5.0 - (2.0 / 3.0) * std::sqrt(35.0);
  if (!(d >= 1.0 && d < d_hi)) {
    throw std::invalid_argument("y3-lb: d must satisfy 1 <= d < 5 - (2/3) sqrt(35) = " +
                                fmt(d_hi) + ", got " + fmt(d));
  }
  const ConstructionParams rp = resolved_params(Family::y3_lower, params);
  const double lo = y3_eps_lower(d);
  const double hi = y3_eps_upper(d);
  const double eps = *rp.eps;
  if (!(eps > lo && eps < hi)) {
    throw std::invalid_argument(
        "y3-lb: eps must lie in (d - 1, 2 - (2/3) sqrt(9 d - 1)) = (" + fmt(lo) + ", " +
        fmt(hi) + "), got " + fmt(eps));
  }
  check_alpha("y3-lb", params.alpha);
  const int r = *rp.r;
  check_chain_length("y3-lb", r);

  // Trapezoid in its natural frame: pq is the top side, a1 b1 the bottom,
  // x and y sit one third of the way down the reflected legs.
  const Point p0{0.0, 0.0};
  const Point q0{1.0, 0.0};
  const Point a10{-eps / 2.0, -1.0};
  const Point b10{1.0 + eps / 2.0, -1.0};
  const Point x0{eps / 6.0, -1.0 / 3.0};
  const Point y0{1.0 - eps / 3.0, -2.0 / 3.0};

  // Rotate a quarter turn counterclockwise, exactly: (u, v) -> (-v, u).
  auto rot = [](Point pt) { return Point{-pt.y, pt.x}; };
  std::vector<Point> pts{rot(p0), rot(q0), rot(x0), rot(y0)};
  std::vector<std::string> labels{"p", "q", "x", "y"};
  const Point a1 = rot(a10);
  // Chain from a1, horizontal rightward tipped clockwise by alpha.
  const double ux = std::cos(-params.alpha);
  const double uy = std::sin(-params.alpha);
  for (int i = 1; i <= r; ++i) {
    Point a{a1.x + (i - 1) * ux, a1.y + (i - 1) * uy};
    if (i > 1) clamp_gap(pts.back(), a, 1.0);
    pts.push_back(a);
    labels.push_back("a" + std::to_string(i));
  }
  // b_i mirrors a_i across the horizontal line through the midpoint of pq
  // (height 1/2), which also reproduces the trapezoid corner b1.
  for (int i = 1; i <= r; ++i) {
    const Point& a = pts[3 + i];
    Point b{a.x, 1.0 - a.y};
    if (i > 1) clamp_gap(pts.back(), b, 1.0);
    pts.push_back(b);
    labels.push_back("b" + std::to_string(i));
  }
  PointSet s(std::move(pts), std::move(labels));

  (void)b10;
  require_cone("y3-lb", s, 0, 2, 3, 1);  // x in cone 1 of p
  require_cone("y3-lb", s, 0, 1, 3, 1);  // q in cone 1 of p
  require_cone("y3-lb", s, 1, 3, 3, 3);  // y in cone 3 of q
  require_cone("y3-lb", s, 1, 0, 3, 3);  // p in cone 3 of q
  if (r >= 2) {
    require_cone("y3-lb", s, 4, 5, 3, 3);  // a2 in cone 3 of a1
  }
  require_margin("y3-lb", "|p x| < |p q|", euclid(s[0], s[1]), euclid(s[0], s[2]));
  require_margin("y3-lb", "|q y| < |q p|", euclid(s[1], s[0]), euclid(s[1], s[3]));
  return s;
}

namespace {

int required_label(const PointSet& s, const std::string& label) {
  const auto idx = s.index_of_label(label);
  if (!idx) {
    throw std::invalid_argument("verify_counterexample: point set lacks the '" + label +
                                "' construction label");
  }
  return *idx;
}

int chain_length_from_labels(const PointSet& s) {
  int r = 0;
  while (s.index_of_label("a" + std::to_string(r + 1))) ++r;
  if (r == 0) {
    throw std::invalid_argument("verify_counterexample: point set has no chain labels a1..ar");
  }
  return r;
}

struct IneqChecker {
  double d;
  std::vector<std::string>* out;

  // Records a violation unless lhs < rhs strictly.
  void less(const std::string& name, double lhs, double rhs) const {
    if (!(lhs < rhs)) {
      out->push_back(name + " fails: " + fmt(lhs) + " >= " + fmt(rhs));
    }
  }
  // Records a violation unless value > d strictly.
  void above_d(const std::string& name, double value) const {
    if (!(value > d)) {
      out->push_back(name + " fails: " + fmt(value) + " <= d = " + fmt(d));
    }
  }
};

}  // namespace

bool VerificationReport::passes() const {
  const bool path_ok = family == Family::y4_lower ? gd_is_path : g1_is_path;
  return g1_connected && path_ok && yk_disconnected && violated_inequalities.empty();
}

VerificationReport verify_counterexample(const PointSet& s, Family family, int k, double d) {
  if (!s.has_labels()) {
    throw std::invalid_argument("verify_counterexample: point set carries no labels");
  }
  if (!(d > 0.0)) {
    throw std::invalid_argument("verify_counterexample: d must be positive");
  }
  VerificationReport rep;
  rep.family = family;
  rep.k = k;
  rep.d = d;

  auto pts = std::make_shared<const PointSet>(s);
  const GeomGraph g1 = disk_graph(pts, 1.0);
  const GeomGraph gd = disk_graph(pts, d);
  const GeomGraph yk = yao_undirected(gd, YaoParams{k, TieBreak::smallest_index});
  const auto comps = components(yk);

  rep.g1_connected = is_connected(g1);
  rep.gd_is_path = is_path_graph(gd);
  rep.g1_is_path = is_path_graph(g1);
  rep.component_count = static_cast<int>(comps.size());
  rep.yk_disconnected = comps.size() >= 2;

  const int pi = required_label(s, "p");
  const int qi = required_label(s, "q");
  for (const GeomEdge& e : yk.edges()) {
    if ((e.src == std::min(pi, qi)) && (e.dst == std::max(pi, qi))) {
      rep.pq_edge_in_yao = true;
      break;
    }
  }

  const Point p = s[pi], q = s[qi];
  const IneqChecker chk{d, &rep.violated_inequalities};
  const int r = chain_length_from_labels(s);
  const Point a1 = s[required_label(s, "a1")];
  const Point b1 = s[required_label(s, "b1")];
  switch (family) {
    case Family::y4_lower: {
      chk.less("|p a1| < |p q|", euclid(p, a1), euclid(p, q));
      chk.less("|q b1| < |q p|", euclid(q, b1), euclid(q, p));
      chk.above_d("|a1 q| > d", euclid(a1, q));
      break;
    }
    case Family::y3_lower: {
      const Point x = s[required_label(s, "x")];
      const Point y = s[required_label(s, "y")];
      chk.less("|p x| < |p q|", euclid(p, x), euclid(p, q));
      chk.less("|q y| < |q p|", euclid(q, y), euclid(q, p));
      chk.above_d("|x y| > d", euclid(x, y));
      chk.above_d("|a1 b1| > d", euclid(a1, b1));
      chk.above_d("|x q| > d", euclid(x, q));
      chk.above_d("|a1 y| > d", euclid(a1, y));
      break;
    }
    case Family::y2_lower: {
      const Point ar = s[required_label(s, "a" + std::to_string(r))];
      const Point br = s[required_label(s, "b" + std::to_string(r))];
      chk.less("|p a1| < |p q|", euclid(p, a1), euclid(p, q));
      chk.less("|q b1| < |q p|", euclid(q, b1), euclid(q, p));
      chk.above_d("|a_r q| > d", euclid(ar, q));
      chk.above_d("|b_r p| > d", euclid(br, p));
      break;
    }
  }
  return rep;
}

}  // namespace yaoconn
