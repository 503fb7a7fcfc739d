#pragma once

#include <utility>
#include <vector>

#include "yaoconn/point_set.hpp"

namespace yaoconn::reference {

// Directed Yao arc list computed the slow, obvious way: for every node and
// every cone, linearly scan all other nodes, keep the nearest in-range one
// (ties to the smaller index). Serial, independent of the library kernel.
// Returns arcs sorted by (src, dst).
std::vector<std::pair<int, int>> yao_arcs_brute(const PointSet& s, double d, int k);

struct LinearRadius {
  bool bounded = false;
  double radius = 0.0;
  double radius_sq = 0.0;
};

// Connectivity radius by scanning every candidate squared pairwise distance
// in increasing order and testing connectivity with a breadth-first search
// over the symmetric closure of the brute-force arc list.
LinearRadius connectivity_radius_linear(const PointSet& s, int k, double cap = 4.0);

}  // namespace yaoconn::reference
