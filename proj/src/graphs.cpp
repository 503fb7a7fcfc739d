#include "yaoconn/graphs.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace yaoconn {

namespace {

void check_endpoints(int n, int a, int b) {
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw std::invalid_argument("GeomGraph: edge endpoint out of range");
  }
  if (a == b) {
    throw std::invalid_argument("GeomGraph: self-loop on node " + std::to_string(a));
  }
}

std::vector<GeomEdge> build_edges(const PointSet& ps,
                                  const std::vector<std::pair<int, int>>& pairs,
                                  bool directed) {
  std::vector<std::pair<int, int>> normalized;
  normalized.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    check_endpoints(ps.size(), a, b);
    if (!directed && a > b) std::swap(a, b);
    normalized.emplace_back(a, b);
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
  std::vector<GeomEdge> edges;
  edges.reserve(normalized.size());
  for (auto [a, b] : normalized) {
    edges.push_back(GeomEdge{a, b, euclid(ps[a], ps[b])});
  }
  return edges;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

}  // namespace

GeomGraph GeomGraph::undirected(std::shared_ptr<const PointSet> pts,
                                const std::vector<std::pair<int, int>>& edges) {
  if (!pts) throw std::invalid_argument("GeomGraph: null point set");
  auto built = build_edges(*pts, edges, /*directed=*/false);
  return GeomGraph(std::move(pts), std::move(built), false);
}

GeomGraph GeomGraph::directed(std::shared_ptr<const PointSet> pts,
                              const std::vector<std::pair<int, int>>& arcs) {
  if (!pts) throw std::invalid_argument("GeomGraph: null point set");
  auto built = build_edges(*pts, arcs, /*directed=*/true);
  return GeomGraph(std::move(pts), std::move(built), true);
}

std::vector<std::vector<int>> GeomGraph::adjacency() const {
  std::vector<std::vector<int>> adj(node_count());
  for (const GeomEdge& e : edges_) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return adj;
}

GeomGraph disk_graph_sq(std::shared_ptr<const PointSet> s, double d_sq) {
  if (!s) throw std::invalid_argument("disk_graph: null point set");
  if (!(d_sq > 0.0)) {
    throw std::invalid_argument("disk_graph: threshold must be positive");
  }
  const PointSet& ps = *s;
  const int n = ps.size();
  std::vector<std::vector<int>> hits(n);
#pragma omp parallel for schedule(static) if (n > 128)
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (sq_dist(ps[i], ps[j]) <= d_sq) hits[i].push_back(j);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j : hits[i]) edges.emplace_back(i, j);
  }
  return GeomGraph::undirected(std::move(s), edges);
}

GeomGraph disk_graph(std::shared_ptr<const PointSet> s, double d) {
  if (!(d > 0.0)) throw std::invalid_argument("disk_graph: radius d must be positive");
  return disk_graph_sq(std::move(s), d * d);
}

GeomGraph disk_graph(const PointSet& s, double d) {
  return disk_graph(std::make_shared<const PointSet>(s), d);
}

GeomGraph yao_directed(const GeomGraph& g, const YaoParams& params) {
  const int k = params.k;
  if (k < 2) throw std::invalid_argument("yao_directed: need k >= 2, got " + std::to_string(k));
  if (g.is_directed()) {
    throw std::invalid_argument("yao_directed: input graph must be undirected");
  }
  const PointSet& ps = g.points();
  const int n = ps.size();
  const auto adj = g.adjacency();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  std::vector<std::vector<std::pair<int, int>>> picked(n);
#pragma omp parallel for schedule(static) if (n > 128)
  for (int p = 0; p < n; ++p) {
    std::vector<int> best(k, -1);
    std::vector<double> best_sq(k, kInf);
    for (int q : adj[p]) {
      const double dsq = sq_dist(ps[p], ps[q]);
      const int c = cone_of(ps[p], ps[q], k) - 1;
      if (dsq < best_sq[c] || (dsq == best_sq[c] && q < best[c])) {
        best_sq[c] = dsq;
        best[c] = q;
      }
    }
    for (int c = 0; c < k; ++c) {
      if (best[c] >= 0) picked[p].emplace_back(p, best[c]);
    }
  }

  std::vector<std::pair<int, int>> arcs;
  for (int p = 0; p < n; ++p) {
    arcs.insert(arcs.end(), picked[p].begin(), picked[p].end());
  }
  return GeomGraph::directed(g.points_ptr(), arcs);
}

GeomGraph yao_undirected(const GeomGraph& g, const YaoParams& params) {
  const GeomGraph y = yao_directed(g, params);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(y.edges().size());
  for (const GeomEdge& e : y.edges()) pairs.emplace_back(e.src, e.dst);
  return GeomGraph::undirected(g.points_ptr(), pairs);
}

std::vector<std::vector<int>> components(const GeomGraph& g) {
  const int n = g.node_count();
  UnionFind uf(n);
  for (const GeomEdge& e : g.edges()) uf.unite(e.src, e.dst);
  std::vector<int> slot(n, -1);
  std::vector<std::vector<int>> comps;
  for (int i = 0; i < n; ++i) {
    const int root = uf.find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[root]].push_back(i);
  }
  return comps;
}

bool is_connected(const GeomGraph& g) { return components(g).size() <= 1; }

bool is_path_graph(const GeomGraph& g) {
  const int n = g.node_count();
  if (n <= 1) return true;
  // Work on the underlying undirected simple graph.
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.edges().size());
  for (const GeomEdge& e : g.edges()) {
    pairs.emplace_back(std::min(e.src, e.dst), std::max(e.src, e.dst));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  if (static_cast<int>(pairs.size()) != n - 1) return false;

  std::vector<int> degree(n, 0);
  UnionFind uf(n);
  for (auto [a, b] : pairs) {
    ++degree[a];
    ++degree[b];
    uf.unite(a, b);
  }
  int deg1 = 0;
  for (int d : degree) {
    if (d == 1) {
      ++deg1;
    } else if (d != 2) {
      return false;
    }
  }
  if (deg1 != 2) return false;
  const int root = uf.find(0);
  for (int i = 1; i < n; ++i) {
    if (uf.find(i) != root) return false;
  }
  return true;
}

}  // namespace yaoconn
