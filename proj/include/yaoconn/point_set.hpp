#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yaoconn/geometry.hpp"

namespace yaoconn {

// Indexed set of pairwise-distinct finite points. Indices are stable: node
// ids in every graph built from the set refer to positions here. Labels are
// optional; when present there is one per point.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);
  PointSet(std::vector<Point> points, std::vector<std::string> labels);

  int size() const { return static_cast<int>(points_.size()); }
  const Point& operator[](int i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  // Index of the first point carrying `label`, if any.
  std::optional<int> index_of_label(const std::string& label) const;

 private:
  void validate() const;

  std::vector<Point> points_;
  std::vector<std::string> labels_;
};

PointSet apply_transform(const PointSet& s, const Transform& t);

}  // namespace yaoconn
