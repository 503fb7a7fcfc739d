#include "yaoconn/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace yaoconn {

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  validate();
}

PointSet::PointSet(std::vector<Point> points, std::vector<std::string> labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != points_.size()) {
    throw std::invalid_argument("PointSet: label count does not match point count");
  }
  validate();
}

void PointSet::validate() const {
  for (const Point& p : points_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("PointSet: coordinates must be finite");
    }
  }
  // Duplicate detection via sorted index order; O(n log n).
  std::vector<int> order(points_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (points_[a].x != points_[b].x) return points_[a].x < points_[b].x;
    return points_[a].y < points_[b].y;
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (points_[order[i - 1]] == points_[order[i]]) {
      throw std::invalid_argument("PointSet: points " + std::to_string(order[i - 1]) +
                                  " and " + std::to_string(order[i]) + " coincide");
    }
  }
}

std::optional<int> PointSet::index_of_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

PointSet apply_transform(const PointSet& s, const Transform& t) {
  std::vector<Point> out;
  out.reserve(s.size());
  for (const Point& p : s.points()) out.push_back(apply_transform(p, t));
  return s.has_labels() ? PointSet(std::move(out), s.labels()) : PointSet(std::move(out));
}

}  // namespace yaoconn
