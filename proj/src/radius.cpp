#include "yaoconn/radius.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "yaoconn/rng.hpp"

namespace yaoconn {

RadiusResult connectivity_radius(const PointSet& s, int k, double cap) {
  if (k < 2) {
    throw std::invalid_argument("connectivity_radius: need k >= 2, got " + std::to_string(k));
  }
  if (!(cap > 0.0)) {
    throw std::invalid_argument("connectivity_radius: cap must be positive");
  }
  RadiusResult res;
  res.cap = cap;
  const int n = s.size();
  if (n <= 1) {
    res.bounded = true;  // trivially connected at any radius
    return res;
  }
  auto pts = std::make_shared<const PointSet>(s);

  const double cap_sq = cap * cap;
  std::vector<double> cand;
  cand.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dsq = sq_dist(s[i], s[j]);
      if (dsq <= cap_sq) cand.push_back(dsq);
    }
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  const YaoParams yp{k, TieBreak::smallest_index};
  auto yao_at = [&](double dsq) { return yao_undirected(disk_graph_sq(pts, dsq), yp); };
  auto connected_at = [&](double dsq) {
    ++res.candidates_examined;
    return is_connected(yao_at(dsq));
  };

  if (cand.empty()) {
    res.bounded = false;  // no pair within cap: disconnected at every d <= cap
    return res;
  }
  if (!connected_at(cand.back())) {
    res.bounded = false;
    res.witness_edges = yao_at(cand.back()).edges();
    return res;
  }
  std::size_t lo = 0, hi = cand.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (connected_at(cand[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  res.bounded = true;
  res.radius_sq = cand[lo];
  res.radius = std::sqrt(cand[lo]);
  res.witness_edges = yao_at(cand[lo]).edges();
  return res;
}

namespace {

std::vector<Point> draw_incremental_disk(int n, std::uint64_t seed, double scale) {
  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(n);
  pts.push_back(Point{0.0, 0.0});
  while (static_cast<int>(pts.size()) < n) {
    const Point& anchor = pts[rng.next_below(pts.size())];
    const double rad = scale * std::sqrt(rng.next_double());
    const double ang = kTwoPi * rng.next_double();
    pts.push_back(Point{anchor.x + rad * std::cos(ang), anchor.y + rad * std::sin(ang)});
  }
  return pts;
}

std::vector<Point> draw_perturbed_grid(int n, std::uint64_t seed, double scale) {
  Rng rng(seed);
  const int m = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::vector<Point> pts;
  pts.reserve(n);
  for (int row = 0; row < m && static_cast<int>(pts.size()) < n; ++row) {
    for (int col = 0; col < m && static_cast<int>(pts.size()) < n; ++col) {
      const double jx = rng.next_double(-0.05, 0.05);
      const double jy = rng.next_double(-0.05, 0.05);
      pts.push_back(Point{scale * (0.9 * col + jx), scale * (0.9 * row + jy)});
    }
  }
  return pts;
}

bool all_distinct(const std::vector<Point>& pts) {
  std::vector<Point> sorted = pts;
  std::sort(sorted.begin(), sorted.end(), [](Point a, Point b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i - 1] == sorted[i]) return false;
  }
  return true;
}

}  // namespace

PointSet random_connected_instance(const InstanceConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("random_connected_instance: need n >= 1");
  if (!(cfg.scale > 0.0)) {
    throw std::invalid_argument("random_connected_instance: scale must be positive");
  }
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    const std::uint64_t seed = attempt == 0 ? cfg.seed : Rng::derive(cfg.seed, attempt);
    std::vector<Point> pts = cfg.model == InstanceModel::incremental_disk
                                 ? draw_incremental_disk(cfg.n, seed, cfg.scale)
                                 : draw_perturbed_grid(cfg.n, seed, cfg.scale);
    if (!all_distinct(pts)) continue;
    PointSet s(std::move(pts));
    if (is_connected(disk_graph(s, 1.0))) return s;
  }
  throw std::runtime_error(
      "random_connected_instance: could not draw a connected instance; "
      "scale is likely too large for a unit-disk graph to connect");
}

BoundStudy bound_study(int k, int trials, int n, std::uint64_t seed, InstanceModel model,
                       double cap) {
  if (trials < 1) throw std::invalid_argument("bound_study: need trials >= 1");
  BoundStudy study;
  study.k = k;
  study.trials = trials;
  study.n = n;
  study.seed = seed;
  study.model = model;
  study.cap = cap;
  study.by_trial.resize(trials);

#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t) {
    InstanceConfig cfg;
    cfg.n = n;
    cfg.seed = Rng::derive(seed, static_cast<std::uint64_t>(t));
    cfg.model = model;
    const PointSet s = random_connected_instance(cfg);
    const RadiusResult r = connectivity_radius(s, k, cap);
    study.by_trial[t] = BoundStudy::Trial{r.bounded, r.radius};
  }

  // Deterministic merge in trial order.
  study.histogram.assign(static_cast<std::size_t>(std::ceil(cap / study.bin_width)) + 1, 0);
  double sum = 0.0;
  int bounded = 0;
  for (const auto& trial : study.by_trial) {
    if (!trial.bounded) {
      ++study.unbounded_count;
      continue;
    }
    ++bounded;
    sum += trial.radius;
    study.max_radius = std::max(study.max_radius, trial.radius);
    auto bin = static_cast<std::size_t>(trial.radius / study.bin_width);
    if (bin >= study.histogram.size()) bin = study.histogram.size() - 1;
    ++study.histogram[bin];
  }
  study.mean_radius = bounded > 0 ? sum / bounded : 0.0;
  return study;
}

}  // namespace yaoconn
