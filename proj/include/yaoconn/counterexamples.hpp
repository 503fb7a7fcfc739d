#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yaoconn/point_set.hpp"

namespace yaoconn {

// Adversarial families: point sets whose unit-disk graph is connected while
// the Yao subgraph of a d-disk graph is not.
//   y4_lower: two unit-spaced chains hanging off a near-vertical segment pq;
//             kills the pq edge in Y_4 for any 1 <= d < sqrt(2).
//   y3_lower: trapezoid p a1 b1 q with interior points x, y plus chains;
//             kills the pq edge in Y_3 for small d > 1.
//   y2_lower: the y4_lower layout with the chains extended until their far
//             ends are more than d apart from the opposite side; works for
//             every d >= 1 at the cost of Theta(d) points.
enum class Family { y4_lower, y3_lower, y2_lower };

std::string family_name(Family f);
// Parses "y4-lb", "y3-lb", "y2-lb".
std::optional<Family> family_from_name(const std::string& name);

struct ConstructionParams {
  double d = 1.0;
  // Chain-offset parameter; default: midpoint of the family's admissible
  // open interval for the given d.
  std::optional<double> eps;
  // Chain tilt in radians; keeps every chain strictly inside its cone.
  double alpha = 1e-4;
  // Chain length; default 3 for y4/y3, minimal separating length for y2.
  std::optional<int> r;
};

// Admissible eps interval endpoints.
double y4_eps_upper(double d);                      // 1 - sqrt(d^2 - 1)
double y3_eps_lower(double d);                      // d - 1
double y3_eps_upper(double d);                      // 2 - (2/3) sqrt(9d - 1)
// Where the separation |xy| > d actually holds; strictly tighter than
// y3_eps_upper for d > 1. Nonempty together with eps > d-1 only for
// d < (4/9) sqrt(21) - 1 ~= 1.0367003.
double y3_eps_feasible_upper(double d);
double y3_d_feasible_upper();

// Minimal chain length r with |a_r q| > d and |b_r p| > d, computed from the
// exact constructed coordinates.
int y2_min_chain_length(double d, double eps, double alpha);

// Fills unset eps/r with the documented per-family defaults. Assumes d (and,
// for y2, eps when set) already lies in the family's admissible range.
ConstructionParams resolved_params(Family f, ConstructionParams p);

// Generators. Output (2r+2) points labeled p, q, a1..ar, b1..br for
// y4/y2 and (2r+4) points labeled p, q, x, y, a1..ar, b1..br for y3, in
// that index order. Parameter-range violations throw with the violated
// bound named; every strict inequality the family relies on (where the
// admissible ranges promise it) is re-checked on the constructed
// coordinates with margin 1e-6.
PointSet gen_y4_lower(const ConstructionParams& params);
PointSet gen_y3_lower(const ConstructionParams& params);
PointSet gen_y2_lower(const ConstructionParams& params);

struct VerificationReport {
  Family family = Family::y4_lower;
  int k = 0;
  double d = 0.0;
  bool g1_connected = false;
  bool gd_is_path = false;
  bool g1_is_path = false;
  bool yk_disconnected = false;
  int component_count = 0;
  bool pq_edge_in_yao = false;
  // One entry per failed named inequality, with measured values.
  std::vector<std::string> violated_inequalities;

  // y4_lower: g1 connected, G^d is a path, Yao disconnected, no violations.
  // y3_lower / y2_lower: same with the path condition on G^1 (for those
  // families G^d legitimately picks up chords once d exceeds |p a1|).
  bool passes() const;
};

// Recomputes the family's claims on a labeled point set: connectivity of the
// unit-disk graph, path shape, component structure of the Yao subgraph at
// (k, d), presence of the {p,q} edge, and the family's named inequalities.
VerificationReport verify_counterexample(const PointSet& s, Family family, int k, double d);

}  // namespace yaoconn
