#pragma once

#include <map>
#include <string>
#include <vector>

#include "yaoconn/graphs.hpp"
#include "yaoconn/point_set.hpp"

namespace yaoconn {

// On-disk form of a point set: coordinates plus optional labels and a
// free-form string-to-string metadata map recording generation parameters.
struct PointSetFile {
  PointSet points{std::vector<Point>{}};
  std::map<std::string, std::string> metadata;
};

// On-disk form of an edge list. Node indices refer to a point-set file that
// travels separately, so the node count is recorded for validation.
struct EdgeListFile {
  bool directed = false;
  int node_count = 0;
  std::vector<GeomEdge> edges;
};

// Serialization is decimal with 17 significant digits, which round-trips
// IEEE doubles bit-exactly; field order and whitespace are fixed so that
// identical inputs produce byte-identical files.
std::string serialize_point_set(const PointSetFile& f);
std::string serialize_edge_list(const EdgeListFile& f);

// Parsers accept exactly the documented format (format tag + version 1) and
// throw std::runtime_error naming the first violated requirement.
PointSetFile parse_point_set(const std::string& text);
EdgeListFile parse_edge_list(const std::string& text);

PointSetFile read_point_set(const std::string& path);
EdgeListFile read_edge_list(const std::string& path);
void write_point_set(const std::string& path, const PointSetFile& f);
void write_edge_list(const std::string& path, const EdgeListFile& f);

// Cross-file consistency: every edge index must address the point set and
// every stored length must match the endpoints' Euclidean distance within
// 1e-12. Throws std::runtime_error otherwise.
void validate_against(const EdgeListFile& edges, const PointSet& points);

}  // namespace yaoconn
