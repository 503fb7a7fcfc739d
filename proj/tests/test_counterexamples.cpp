#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "yaoconn/counterexamples.hpp"
#include "yaoconn/graphs.hpp"

using namespace yaoconn;

namespace {

// Closed-form chain-length oracle, valid in the alpha -> 0 limit: the chain
// tip sits at distance r - eps from p on the far side, so |a_r q| > d needs
// (r - eps)^2 + 1 > d^2, i.e. r > eps + sqrt(d^2 - 1).
int min_chain_oracle(double d, double eps) {
  return static_cast<int>(std::floor(eps + std::sqrt(d * d - 1.0))) + 1;
}

bool throws_with(const char* needle, void (*fn)()) {
  try {
    fn();
  } catch (const std::invalid_argument& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_SUITE("counterexamples") {

TEST_CASE("family names round-trip") {
  for (Family f : {Family::y4_lower, Family::y3_lower, Family::y2_lower}) {
    CHECK(family_from_name(family_name(f)) == f);
  }
  CHECK(!family_from_name("y5-lb").has_value());
}

TEST_CASE("resolved_params fills the documented defaults") {
  ConstructionParams p;
  p.d = 1.3;
  const ConstructionParams y4 = resolved_params(Family::y4_lower, p);
  CHECK(*y4.eps == 0.5 * y4_eps_upper(1.3));
  CHECK(*y4.r == 3);

  const ConstructionParams y3 = resolved_params(Family::y3_lower, ConstructionParams{1.02, {}, 1e-4, {}});
  CHECK(*y3.eps == 0.5 * (y3_eps_lower(1.02) + y3_eps_upper(1.02)));
  CHECK(*y3.r == 3);

  const ConstructionParams y2 = resolved_params(Family::y2_lower, ConstructionParams{3.0, {}, 1e-4, {}});
  CHECK(*y2.eps == 0.5);
  CHECK(*y2.r == y2_min_chain_length(3.0, 0.5, 1e-4));

  // Explicit values pass through untouched.
  const ConstructionParams kept = resolved_params(Family::y4_lower, ConstructionParams{1.3, 0.01, 1e-3, 7});
  CHECK(*kept.eps == 0.01);
  CHECK(*kept.r == 7);
}

TEST_CASE("eps window endpoints: frozen values") {
  CHECK(y4_eps_upper(1.0) == 1.0);
  CHECK(y4_eps_upper(1.3) == doctest::Approx(1.0 - std::sqrt(0.69)).epsilon(1e-15));
  CHECK(y3_eps_lower(1.05) == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(y3_eps_upper(1.05) == doctest::Approx(0.06207441950018239).epsilon(1e-12));
  CHECK(y3_d_feasible_upper() == doctest::Approx(1.0367003088692623).epsilon(1e-12));
  // At the feasibility threshold the separating window closes: upper == lower.
  const double dstar = y3_d_feasible_upper();
  CHECK(y3_eps_feasible_upper(dstar) == doctest::Approx(y3_eps_lower(dstar)).epsilon(1e-9));
  // Beyond it the window is empty; 1.05 sits outside.
  CHECK(y3_eps_feasible_upper(1.05) < y3_eps_lower(1.05));
}

TEST_CASE("y4 family: geometry of the documented example") {
  ConstructionParams p;
  p.d = 1.3;
  p.eps = 0.1;
  p.alpha = 1e-4;
  p.r = 2;
  const PointSet s = gen_y4_lower(p);
  REQUIRE(s.size() == 6);
  REQUIRE(s.has_labels());
  CHECK(s.label(0) == "p");
  CHECK(s.label(1) == "q");
  CHECK(s.label(2) == "a1");
  CHECK(s.label(3) == "a2");
  CHECK(s.label(4) == "b1");
  CHECK(s.label(5) == "b2");

  const Point pp = s[0], q = s[1], a1 = s[2], b1 = s[4];
  CHECK(euclid(pp, q) <= 1.0);  // must survive the unit-disk test exactly
  CHECK(euclid(pp, q) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(euclid(pp, a1) == doctest::Approx(0.9).epsilon(1e-12));
  // Chain tip to the opposite post: sqrt(1 + (1 - eps)^2) up to the alpha tilt.
  CHECK(euclid(a1, q) == doctest::Approx(std::sqrt(1.81)).epsilon(1e-3));
  CHECK(euclid(a1, q) > 1.3 + 1e-6);
  // b-side is the point reflection of the a-side through the midpoint of pq.
  CHECK(b1.x == doctest::Approx(pp.x + q.x - a1.x).epsilon(1e-12));
  CHECK(b1.y == doctest::Approx(pp.y + q.y - a1.y).epsilon(1e-12));

  const VerificationReport rep = verify_counterexample(s, Family::y4_lower, 4, 1.3);
  CHECK(rep.passes());
  CHECK(rep.g1_connected);
  CHECK(rep.gd_is_path);
  CHECK(rep.component_count == 2);
  CHECK(!rep.pq_edge_in_yao);
  CHECK(rep.violated_inequalities.empty());

  // At d = sqrt(2) the chain tip comes back into range and Y_4 reconnects.
  const VerificationReport wide = verify_counterexample(s, Family::y4_lower, 4, std::sqrt(2.0));
  CHECK(!wide.yk_disconnected);
}

TEST_CASE("y4 family: parameter validation names the violated bound") {
  CHECK_THROWS_AS(gen_y4_lower(ConstructionParams{0.99, {}, 1e-4, {}}), std::invalid_argument);
  CHECK_THROWS_AS(gen_y4_lower(ConstructionParams{1.42, {}, 1e-4, {}}), std::invalid_argument);
  CHECK(throws_with("eps must lie in", [] { gen_y4_lower(ConstructionParams{1.3, 0.35, 1e-4, {}}); }));
  CHECK(throws_with("alpha", [] { gen_y4_lower(ConstructionParams{1.3, 0.1, 0.2, {}}); }));
  CHECK(throws_with("chain length", [] { gen_y4_lower(ConstructionParams{1.3, 0.1, 1e-4, 0}); }));
}

TEST_CASE("y3 family: frozen trapezoid coordinates") {
  ConstructionParams p;
  p.d = 1.02;
  const ConstructionParams rp = resolved_params(Family::y3_lower, p);
  const double eps = *rp.eps;
  const PointSet s = gen_y3_lower(p);
  REQUIRE(s.size() == 10);  // p q x y + two chains of length 3
  CHECK(s.label(2) == "x");
  CHECK(s.label(3) == "y");

  // The construction is laid out flat and rotated a quarter turn, which is
  // exact in floating point; these coordinates are therefore exact.
  CHECK(s[0] == Point{0.0, 0.0});
  CHECK(s[1] == Point{0.0, 1.0});
  CHECK(s[2].x == 1.0 / 3.0);
  CHECK(s[2].y == eps / 6.0);
  CHECK(s[3].x == 2.0 / 3.0);
  CHECK(s[3].y == 1.0 - eps / 3.0);
  const int a1 = *s.index_of_label("a1");
  const int b1 = *s.index_of_label("b1");
  CHECK(s[a1] == Point{1.0, -(eps / 2.0)});
  CHECK(s[b1] == Point{1.0, 1.0 + eps / 2.0});

  // Separations that keep the two halves apart in the d-disk graph.
  CHECK(sq_dist(s[2], s[3]) ==
        doctest::Approx(1.0 / 9.0 + (1.0 - eps / 2.0) * (1.0 - eps / 2.0)).epsilon(1e-14));
  CHECK(euclid(s[a1], s[b1]) == doctest::Approx(1.0 + eps).epsilon(1e-14));

  const VerificationReport rep = verify_counterexample(s, Family::y3_lower, 3, 1.02);
  CHECK(rep.passes());
  CHECK(rep.g1_is_path);
  CHECK(rep.component_count == 2);
  CHECK(!rep.pq_edge_in_yao);
}

TEST_CASE("y3 family: the separation fails beyond the feasibility threshold") {
  // The published eps window stays nonempty up to d ~ 1.0566, but |xy| > d
  // is satisfiable only for d < y3_d_feasible_upper() ~ 1.0367. At d = 1.05
  // the generator runs (parameters are in the published window) and the
  // verifier honestly reports the violated separation.
  ConstructionParams p;
  p.d = 1.05;
  const PointSet s = gen_y3_lower(p);
  const VerificationReport rep = verify_counterexample(s, Family::y3_lower, 3, 1.05);
  CHECK(!rep.passes());
  REQUIRE(!rep.violated_inequalities.empty());
  bool mentions_xy = false;
  for (const std::string& v : rep.violated_inequalities) {
    mentions_xy = mentions_xy || v.find("|x y| > d") != std::string::npos;
  }
  CHECK(mentions_xy);
  // The Yao graph itself reconnects: x and q are within 1.05 of each other.
  CHECK(euclid(s[2], s[1]) <= 1.05);
}

TEST_CASE("y3 family: parameter validation") {
  CHECK_THROWS_AS(gen_y3_lower(ConstructionParams{1.2, {}, 1e-4, {}}), std::invalid_argument);
  CHECK(throws_with("eps must lie in", [] { gen_y3_lower(ConstructionParams{1.02, 0.01, 1e-4, {}}); }));
  CHECK(throws_with("eps must lie in", [] { gen_y3_lower(ConstructionParams{1.02, 0.095, 1e-4, {}}); }));
}

TEST_CASE("y2 family: minimal chain length matches the closed form") {
  CHECK(y2_min_chain_length(3.0, 0.1, 1e-4) == 3);
  for (double d : {1.0, 1.5, 2.0, 3.0, 5.0, 7.25, 10.0}) {
    for (double eps : {0.1, 0.5, 0.9}) {
      CAPTURE(d);
      CAPTURE(eps);
      REQUIRE(y2_min_chain_length(d, eps, 1e-4) == min_chain_oracle(d, eps));
    }
  }
  // Default-eps chain lengths used by the verification suite.
  CHECK(y2_min_chain_length(1.0, 0.5, 1e-4) == 1);
  CHECK(y2_min_chain_length(2.0, 0.5, 1e-4) == 3);
  CHECK(y2_min_chain_length(5.0, 0.5, 1e-4) == 6);
  CHECK(y2_min_chain_length(10.0, 0.5, 1e-4) == 11);
}

TEST_CASE("y2 family: construction, unit gaps, and verification") {
  ConstructionParams p;
  p.d = 3.0;
  p.eps = 0.1;
  const PointSet s = gen_y2_lower(p);
  const int r = y2_min_chain_length(3.0, 0.1, 1e-4);
  REQUIRE(s.size() == 2 * r + 2);

  // Every intended unit edge must pass the closed unit-disk test exactly,
  // and may undershoot only by ulps.
  const int pi = *s.index_of_label("p");
  const int qi = *s.index_of_label("q");
  CHECK(sq_dist(s[pi], s[qi]) <= 1.0);
  CHECK(sq_dist(s[pi], s[qi]) >= 1.0 - 1e-12);
  for (int i = 1; i < r; ++i) {
    const int ai = *s.index_of_label("a" + std::to_string(i));
    const int an = *s.index_of_label("a" + std::to_string(i + 1));
    REQUIRE(sq_dist(s[ai], s[an]) <= 1.0);
    REQUIRE(sq_dist(s[ai], s[an]) >= 1.0 - 1e-12);
  }

  // Central symmetry of the two chains about the midpoint of pq.
  for (int i = 1; i <= r; ++i) {
    const Point a = s[*s.index_of_label("a" + std::to_string(i))];
    const Point b = s[*s.index_of_label("b" + std::to_string(i))];
    REQUIRE(b.x == doctest::Approx(s[pi].x + s[qi].x - a.x).epsilon(1e-12));
    REQUIRE(b.y == doctest::Approx(s[pi].y + s[qi].y - a.y).epsilon(1e-12));
  }

  const VerificationReport rep = verify_counterexample(s, Family::y2_lower, 2, 3.0);
  CHECK(rep.passes());
  CHECK(rep.g1_is_path);
  CHECK(rep.component_count == 2);
  CHECK(!rep.pq_edge_in_yao);
}

TEST_CASE("y2 family: undersized chains are rejected with the minimal r named") {
  CHECK(throws_with("minimal admissible r is 3",
                    [] { gen_y2_lower(ConstructionParams{3.0, 0.1, 1e-4, 2}); }));
  // Oversized chains are fine.
  const PointSet s = gen_y2_lower(ConstructionParams{3.0, 0.1, 1e-4, 5});
  CHECK(s.size() == 12);
  CHECK(verify_counterexample(s, Family::y2_lower, 2, 3.0).passes());

  CHECK_THROWS_AS(gen_y2_lower(ConstructionParams{0.9, {}, 1e-4, {}}), std::invalid_argument);
  CHECK(throws_with("eps must lie in", [] { gen_y2_lower(ConstructionParams{3.0, 1.2, 1e-4, {}}); }));
}

TEST_CASE("verify_counterexample validates its input") {
  const PointSet unlabeled({Point{0, 0}, Point{0, 1}});
  CHECK_THROWS_AS(verify_counterexample(unlabeled, Family::y4_lower, 4, 1.3), std::invalid_argument);

  const PointSet no_chain({Point{0, 0}, Point{0, 1}}, {"p", "q"});
  CHECK_THROWS_AS(verify_counterexample(no_chain, Family::y4_lower, 4, 1.3), std::invalid_argument);

  // A y4 set lacks the x/y labels the y3 inequalities need.
  const PointSet y4set = gen_y4_lower(ConstructionParams{1.3, 0.1, 1e-4, 2});
  CHECK_THROWS_AS(verify_counterexample(y4set, Family::y3_lower, 3, 1.02), std::invalid_argument);
  CHECK_THROWS_AS(verify_counterexample(y4set, Family::y4_lower, 4, 0.0), std::invalid_argument);
}

}  // TEST_SUITE
