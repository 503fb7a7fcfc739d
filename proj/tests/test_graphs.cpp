#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "yaoconn/graphs.hpp"
#include "yaoconn/point_set.hpp"
#include "yaoconn/reference.hpp"
#include "yaoconn/rng.hpp"

using namespace yaoconn;

namespace {

std::shared_ptr<const PointSet> make_set(std::vector<Point> pts) {
  return std::make_shared<const PointSet>(std::move(pts));
}

std::vector<std::pair<int, int>> arc_pairs(const GeomGraph& g) {
  std::vector<std::pair<int, int>> out;
  out.reserve(g.edges().size());
  for (const GeomEdge& e : g.edges()) out.emplace_back(e.src, e.dst);
  return out;
}

PointSet random_points(Rng& rng, int n, double span) {
  std::vector<Point> pts;
  pts.reserve(n);
  while (static_cast<int>(pts.size()) < n) {
    const Point p{rng.next_double(-span, span), rng.next_double(-span, span)};
    bool dup = false;
    for (const Point& q : pts) dup = dup || q == p;
    if (!dup) pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

}  // namespace

TEST_SUITE("graphs") {

TEST_CASE("PointSet validates its input") {
  CHECK_THROWS_AS(PointSet({Point{0, 0}, Point{1, 1}, Point{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PointSet({Point{0, 0}, Point{std::numeric_limits<double>::infinity(), 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PointSet({Point{0, 0}, Point{1, 1}}, {"only-one"}), std::invalid_argument);

  const PointSet s({Point{0, 0}, Point{1, 1}}, {"p", "q"});
  CHECK(s.index_of_label("q") == 1);
  CHECK(!s.index_of_label("missing").has_value());
}

TEST_CASE("GeomGraph normalizes, sorts, and deduplicates undirected edges") {
  auto pts = make_set({Point{0, 0}, Point{3, 4}, Point{6, 0}});
  const GeomGraph g = GeomGraph::undirected(pts, {{2, 0}, {0, 2}, {1, 0}});
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edges()[0].src == 0);
  CHECK(g.edges()[0].dst == 1);
  CHECK(g.edges()[0].length == 5.0);
  CHECK(g.edges()[1].src == 0);
  CHECK(g.edges()[1].dst == 2);
  CHECK(g.edges()[1].length == 6.0);

  const GeomGraph d = GeomGraph::directed(pts, {{2, 0}});
  CHECK(d.is_directed());
  CHECK(d.edges()[0].src == 2);
  CHECK(d.edges()[0].dst == 0);

  CHECK_THROWS_AS(GeomGraph::undirected(pts, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(GeomGraph::undirected(pts, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("disk_graph uses the exact closed threshold") {
  // |pq| = 5 exactly: the edge must appear at d = 5 and vanish just below.
  const PointSet s({Point{0, 0}, Point{3, 4}});
  CHECK(disk_graph(s, 5.0).edge_count() == 1);
  CHECK(disk_graph(s, std::nextafter(5.0, 0.0)).edge_count() == 0);
  CHECK_THROWS_AS(disk_graph(s, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(disk_graph(s, -1.0), std::invalid_argument);
}

TEST_CASE("disk_graph_sq includes every pair at its exact squared distance") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Point a{rng.next_double(-10, 10), rng.next_double(-10, 10)};
    const Point b{rng.next_double(-10, 10), rng.next_double(-10, 10)};
    if (a == b) continue;
    auto s = make_set({a, b});
    REQUIRE(disk_graph_sq(s, sq_dist(a, b)).edge_count() == 1);
  }
}

TEST_CASE("disk_graph on collinear unit-spaced points is the path") {
  const PointSet s({Point{0, 0}, Point{1, 0}, Point{2, 0}});
  const GeomGraph g1 = disk_graph(s, 1.0);
  CHECK(g1.edge_count() == 2);
  CHECK(is_path_graph(g1));
  CHECK(disk_graph(s, 2.0).edge_count() == 3);
}

TEST_CASE("yao_directed breaks exact ties toward the smaller node index") {
  // Both candidates sit in cone 1 (k=4) at squared distance exactly 5.
  auto pts = make_set({Point{0, 0}, Point{2, 1}, Point{1, 2}});
  const GeomGraph full = disk_graph(pts, 3.0);
  const GeomGraph y = yao_directed(full, YaoParams{4, TieBreak::smallest_index});
  const auto arcs = arc_pairs(y);
  CHECK(std::count(arcs.begin(), arcs.end(), std::make_pair(0, 1)) == 1);
  CHECK(std::count(arcs.begin(), arcs.end(), std::make_pair(0, 2)) == 0);

  // Swap the candidate indices; the arc must follow the smaller index, not
  // the coordinates.
  auto swapped = make_set({Point{0, 0}, Point{1, 2}, Point{2, 1}});
  const auto arcs2 = arc_pairs(yao_directed(disk_graph(swapped, 3.0), YaoParams{4, {}}));
  CHECK(std::count(arcs2.begin(), arcs2.end(), std::make_pair(0, 1)) == 1);
  CHECK(std::count(arcs2.begin(), arcs2.end(), std::make_pair(0, 2)) == 0);
}

TEST_CASE("yao_directed rejects bad input") {
  auto pts = make_set({Point{0, 0}, Point{1, 0}});
  const GeomGraph d = GeomGraph::directed(pts, {{0, 1}});
  CHECK_THROWS_AS(yao_directed(d, YaoParams{4, {}}), std::invalid_argument);
  const GeomGraph u = GeomGraph::undirected(pts, {{0, 1}});
  CHECK_THROWS_AS(yao_directed(u, YaoParams{1, {}}), std::invalid_argument);
}

TEST_CASE("yao_directed matches the brute-force per-cone scan") {
  Rng rng(2026);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(7));
    const PointSet s = random_points(rng, n, 2.0);
    for (int k : {2, 3, 4, 6}) {
      const double d = rng.next_double(0.5, 4.0);
      const GeomGraph y = yao_directed(disk_graph(s, d), YaoParams{k, {}});
      const auto got = arc_pairs(y);
      const auto want = reference::yao_arcs_brute(s, d, k);
      CAPTURE(trial);
      CAPTURE(k);
      CAPTURE(d);
      REQUIRE(got == want);
    }
  }
}

TEST_CASE("yao arc counts never exceed k per node") {
  Rng rng(5150);
  const PointSet s = random_points(rng, 60, 2.0);
  for (int k : {2, 3, 4, 9}) {
    const GeomGraph y = yao_directed(disk_graph(s, 1.5), YaoParams{k, {}});
    std::vector<int> out_deg(s.size(), 0);
    for (const GeomEdge& e : y.edges()) ++out_deg[e.src];
    for (int deg : out_deg) REQUIRE(deg <= k);
    CHECK(y.edge_count() <= k * s.size());
  }
}

TEST_CASE("yao_undirected is the symmetric closure of yao_directed") {
  Rng rng(404);
  const PointSet s = random_points(rng, 40, 1.5);
  const GeomGraph base = disk_graph(s, 1.0);
  const GeomGraph dir = yao_directed(base, YaoParams{4, {}});
  const GeomGraph und = yao_undirected(base, YaoParams{4, {}});
  CHECK(!und.is_directed());

  std::vector<std::pair<int, int>> expect;
  for (const GeomEdge& e : dir.edges()) {
    expect.emplace_back(std::min(e.src, e.dst), std::max(e.src, e.dst));
  }
  std::sort(expect.begin(), expect.end());
  expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
  CHECK(arc_pairs(und) == expect);
}

TEST_CASE("yao edges are a subset of the base graph's edges") {
  Rng rng(808);
  const PointSet s = random_points(rng, 50, 1.2);
  const GeomGraph base = disk_graph(s, 0.8);
  const auto base_edges = arc_pairs(base);
  const GeomGraph und = yao_undirected(base, YaoParams{3, {}});
  for (const GeomEdge& e : und.edges()) {
    REQUIRE(std::binary_search(base_edges.begin(), base_edges.end(),
                               std::make_pair(e.src, e.dst)));
  }
}

TEST_CASE("components are sorted and ordered by smallest member") {
  auto pts = make_set({Point{0, 0}, Point{10, 0}, Point{1, 0}, Point{20, 0}, Point{21, 0}});
  const GeomGraph g = GeomGraph::undirected(pts, {{3, 4}, {0, 2}});
  const auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{0, 2});
  CHECK(comps[1] == std::vector<int>{1});
  CHECK(comps[2] == std::vector<int>{3, 4});
  CHECK(!is_connected(g));
}

TEST_CASE("is_connected and is_path_graph handle the degenerate sizes") {
  CHECK(is_connected(GeomGraph::undirected(make_set({}), {})));
  CHECK(is_path_graph(GeomGraph::undirected(make_set({}), {})));
  CHECK(is_connected(GeomGraph::undirected(make_set({Point{0, 0}}), {})));
  CHECK(is_path_graph(GeomGraph::undirected(make_set({Point{0, 0}}), {})));
}

TEST_CASE("is_path_graph recognizes shape, not just connectivity") {
  auto two = make_set({Point{0, 0}, Point{1, 0}});
  CHECK(is_path_graph(GeomGraph::undirected(two, {{0, 1}})));

  auto tri = make_set({Point{0, 0}, Point{1, 0}, Point{0, 1}});
  CHECK(!is_path_graph(GeomGraph::undirected(tri, {{0, 1}, {1, 2}, {0, 2}})));

  auto star = make_set({Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{-1, 0}});
  CHECK(!is_path_graph(GeomGraph::undirected(star, {{0, 1}, {0, 2}, {0, 3}})));

  auto path4 = make_set({Point{0, 0}, Point{1, 0}, Point{2, 0}, Point{3, 0}});
  CHECK(is_path_graph(GeomGraph::undirected(path4, {{2, 3}, {0, 1}, {1, 2}})));
  // Disconnected graph with the right degree sequence is still not a path.
  auto six = make_set({Point{0, 0}, Point{1, 0}, Point{2, 0}, Point{0, 1}, Point{1, 1}, Point{2, 1}});
  CHECK(!is_path_graph(GeomGraph::undirected(six, {{0, 1}, {1, 2}, {3, 4}, {4, 5}})));
}

}  // TEST_SUITE
