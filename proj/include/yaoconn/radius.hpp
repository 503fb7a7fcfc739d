#pragma once

#include <cstdint>
#include <vector>

#include "yaoconn/graphs.hpp"

namespace yaoconn {

struct RadiusResult {
  // False: the Yao subgraph stays disconnected at every candidate <= cap.
  bool bounded = false;
  // Smallest connecting candidate distance (0 for sets of fewer than 2
  // points, which are connected at any radius).
  double radius = 0.0;
  // The exact squared candidate; rebuild the witness graph via
  // disk_graph_sq(s, radius_sq), since squaring the rounded `radius` can
  // miss the generating pair by one ulp.
  double radius_sq = 0.0;
  double cap = 0.0;
  // Predicate evaluations performed by the search.
  long candidates_examined = 0;
  // Yao edge set at `radius` when bounded; at the largest candidate <= cap
  // when unbounded (empty if there is no candidate at all).
  std::vector<GeomEdge> witness_edges;
};

// Smallest candidate d with yao_undirected(disk_graph(s, d), k) connected,
// where the candidates are the sorted distinct pairwise distances <= cap.
// Binary search over the candidates; valid because the selected Yao arc set
// only grows with d (each cone's target is the cone-wise nearest neighbor,
// fixed once in range).
RadiusResult connectivity_radius(const PointSet& s, int k, double cap = 4.0);

enum class InstanceModel {
  // First point at the origin; each next point uniform in the disk of radius
  // `scale` around a uniformly chosen existing point.
  incremental_disk,
  // ceil(sqrt(n)) x ceil(sqrt(n)) grid, spacing 0.9*scale, per-coordinate
  // jitter uniform in [-0.05, 0.05]*scale, first n points in row-major order.
  perturbed_grid,
};

struct InstanceConfig {
  int n = 50;
  std::uint64_t seed = 0;
  InstanceModel model = InstanceModel::incremental_disk;
  double scale = 1.0;
};

// Random point set whose unit-disk graph is connected (checked after
// generation; deterministically re-drawn from a derived seed on the rare
// failure). Deterministic given the config.
PointSet random_connected_instance(const InstanceConfig& cfg);

struct BoundStudy {
  struct Trial {
    bool bounded = false;
    double radius = 0.0;
  };

  int k = 0;
  int trials = 0;
  int n = 0;
  std::uint64_t seed = 0;
  InstanceModel model = InstanceModel::incremental_disk;
  double cap = 0.0;

  std::vector<Trial> by_trial;  // indexed by trial
  int unbounded_count = 0;
  double max_radius = 0.0;   // over bounded trials
  double mean_radius = 0.0;  // over bounded trials
  double bin_width = 0.01;
  std::vector<long> histogram;  // bin i counts radii in [i*bin_width, (i+1)*bin_width)
};

// connectivity_radius over `trials` random instances. Trials execute in
// parallel, each seeded from the master seed by its index, and are merged
// deterministically in index order.
BoundStudy bound_study(int k, int trials, int n, std::uint64_t seed,
                       InstanceModel model = InstanceModel::incremental_disk,
                       double cap = 4.0);

}  // namespace yaoconn
