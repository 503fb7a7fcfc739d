#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "yaoconn/point_set.hpp"

namespace yaoconn {

struct GeomEdge {
  int src = 0;
  int dst = 0;
  double length = 0.0;
};

inline bool operator==(const GeomEdge& a, const GeomEdge& b) {
  return a.src == b.src && a.dst == b.dst && a.length == b.length;
}
inline bool operator!=(const GeomEdge& a, const GeomEdge& b) { return !(a == b); }

// Geometric graph over a PointSet. Undirected edges are normalized to
// src < dst; directed arcs keep their orientation. Edge lists are sorted
// lexicographically and deduplicated, and every stored length equals the
// Euclidean distance between the edge's endpoints.
class GeomGraph {
 public:
  GeomGraph() = default;

  static GeomGraph undirected(std::shared_ptr<const PointSet> pts,
                              const std::vector<std::pair<int, int>>& edges);
  static GeomGraph directed(std::shared_ptr<const PointSet> pts,
                            const std::vector<std::pair<int, int>>& arcs);

  bool is_directed() const { return directed_; }
  int node_count() const { return pts_ ? pts_->size() : 0; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<GeomEdge>& edges() const { return edges_; }
  const PointSet& points() const { return *pts_; }
  const std::shared_ptr<const PointSet>& points_ptr() const { return pts_; }

  // Neighbor lists with direction ignored, each sorted ascending.
  std::vector<std::vector<int>> adjacency() const;

 private:
  GeomGraph(std::shared_ptr<const PointSet> pts, std::vector<GeomEdge> edges, bool directed)
      : pts_(std::move(pts)), edges_(std::move(edges)), directed_(directed) {}

  std::shared_ptr<const PointSet> pts_;
  std::vector<GeomEdge> edges_;
  bool directed_ = false;
};

// Disk graph: edge {p,q} iff |pq| <= d, tested as sq_dist <= d*d with no
// tolerance slack. d must be positive.
GeomGraph disk_graph(std::shared_ptr<const PointSet> s, double d);
GeomGraph disk_graph(const PointSet& s, double d);

// Same predicate with the squared threshold supplied directly; used by the
// radius search so candidates never pass through a sqrt/square round trip.
GeomGraph disk_graph_sq(std::shared_ptr<const PointSet> s, double d_sq);

enum class TieBreak {
  smallest_index,  // among equidistant candidates keep the smallest node id
};

struct YaoParams {
  int k = 4;  // number of cones; k >= 2
  TieBreak tie_break = TieBreak::smallest_index;
};

// Directed Yao subgraph: for each node p and each cone i, keep one arc to a
// nearest g-neighbor of p inside cone i (ties by node index). At most k
// outgoing arcs per node. Input must be undirected.
GeomGraph yao_directed(const GeomGraph& g, const YaoParams& params);

// Symmetric closure of yao_directed: undirected edge {p,q} iff at least one
// of the arcs p->q, q->p was selected.
GeomGraph yao_undirected(const GeomGraph& g, const YaoParams& params);

// Connected components with direction ignored. Partition of [0, n); each
// component sorted ascending, components ordered by smallest member.
std::vector<std::vector<int>> components(const GeomGraph& g);

// Graphs on 0 or 1 nodes count as connected.
bool is_connected(const GeomGraph& g);

// True iff the underlying undirected graph is a simple path visiting every
// node: connected, n-1 edges, two endpoints of degree 1, rest of degree 2.
// Graphs on 0 or 1 nodes count as paths.
bool is_path_graph(const GeomGraph& g);

}  // namespace yaoconn
