#include "yaoconn/reference.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "yaoconn/geometry.hpp"

namespace yaoconn::reference {

namespace {

// Cone membership by explicit boundary comparison: cone c covers angles in
// [(c-1) w, c w) for w = 2 pi / k, with the full-turn rounding artifact
// (theta == 2 pi after normalization) belonging to the last cone.
bool in_cone(const Point& apex, const Point& q, int k, int c) {
  double theta = std::atan2(q.y - apex.y, q.x - apex.x);
  if (theta < 0.0) theta += kTwoPi;
  if (theta >= kTwoPi) return c == k;
  const double w = kTwoPi / k;
  return theta >= (c - 1) * w && theta < c * w;
}

std::vector<std::pair<int, int>> arcs_at_sq(const PointSet& s, double threshold_sq, int k) {
  const int n = static_cast<int>(s.size());
  std::vector<std::pair<int, int>> arcs;
  for (int p = 0; p < n; ++p) {
    for (int c = 1; c <= k; ++c) {
      int best = -1;
      double best_sq = 0.0;
      for (int q = 0; q < n; ++q) {
        if (q == p) continue;
        const double dx = s[q].x - s[p].x;
        const double dy = s[q].y - s[p].y;
        const double dsq = dx * dx + dy * dy;
        if (dsq > threshold_sq) continue;
        if (!in_cone(s[p], s[q], k, c)) continue;
        if (best == -1 || dsq < best_sq || (dsq == best_sq && q < best)) {
          best = q;
          best_sq = dsq;
        }
      }
      if (best != -1) arcs.emplace_back(p, best);
    }
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

bool connected_by_bfs(int n, const std::vector<std::pair<int, int>>& arcs) {
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : arcs) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(n, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n;
}

}  // namespace

std::vector<std::pair<int, int>> yao_arcs_brute(const PointSet& s, double d, int k) {
  if (k < 2) throw std::invalid_argument("yao_arcs_brute: need k >= 2");
  if (!(d > 0.0)) throw std::invalid_argument("yao_arcs_brute: need d > 0");
  return arcs_at_sq(s, d * d, k);
}

LinearRadius connectivity_radius_linear(const PointSet& s, int k, double cap) {
  if (k < 2) throw std::invalid_argument("connectivity_radius_linear: need k >= 2");
  if (!(cap > 0.0)) throw std::invalid_argument("connectivity_radius_linear: need cap > 0");
  const int n = static_cast<int>(s.size());
  LinearRadius out;
  if (n <= 1) {
    out.bounded = true;
    return out;
  }
  std::vector<double> cands;
  const double cap_sq = cap * cap;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = s[j].x - s[i].x;
      const double dy = s[j].y - s[i].y;
      const double dsq = dx * dx + dy * dy;
      if (dsq <= cap_sq) cands.push_back(dsq);
    }
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (double c : cands) {
    if (connected_by_bfs(n, arcs_at_sq(s, c, k))) {
      out.bounded = true;
      out.radius_sq = c;
      out.radius = std::sqrt(c);
      return out;
    }
  }
  return out;
}

}  // namespace yaoconn::reference
