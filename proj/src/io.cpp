#include "yaoconn/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "yaoconn/geometry.hpp"

namespace yaoconn {

namespace {

constexpr const char* kPointsFormat = "yaoconn.points";
constexpr const char* kEdgesFormat = "yaoconn.edges";
constexpr int kFormatVersion = 1;

std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

[[noreturn]] void bad_file(const std::string& what) {
  throw std::runtime_error("invalid input file: " + what);
}

nlohmann::json parse_checked(const std::string& text, const char* format) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad_file(std::string("not well-formed: ") + e.what());
  }
  if (!j.is_object()) bad_file("top level must be an object");
  if (!j.contains("format") || !j["format"].is_string() || j["format"] != format) {
    bad_file(std::string("missing or wrong format tag (expected \"") + format + "\")");
  }
  if (!j.contains("version") || !j["version"].is_number_integer() ||
      j["version"].get<int>() != kFormatVersion) {
    bad_file("unsupported version (expected 1)");
  }
  return j;
}

}  // namespace

std::string serialize_point_set(const PointSetFile& f) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"format\": \"" << kPointsFormat << "\",\n";
  out << "  \"version\": " << kFormatVersion << ",\n";
  out << "  \"points\": [";
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    out << (i ? ",\n    " : "\n    ");
    out << "[" << num17(f.points[i].x) << ", " << num17(f.points[i].y) << "]";
  }
  out << (f.points.size() ? "\n  ]" : "]");
  if (f.points.has_labels()) {
    out << ",\n  \"labels\": [";
    const auto& labels = f.points.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      out << (i ? ", " : "") << "\"" << json_escape(labels[i]) << "\"";
    }
    out << "]";
  }
  out << ",\n  \"metadata\": {";
  std::size_t i = 0;
  for (const auto& [key, value] : f.metadata) {
    out << (i++ ? ",\n    " : "\n    ");
    out << "\"" << json_escape(key) << "\": \"" << json_escape(value) << "\"";
  }
  out << (f.metadata.empty() ? "}" : "\n  }");
  out << "\n}\n";
  return out.str();
}

std::string serialize_edge_list(const EdgeListFile& f) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"format\": \"" << kEdgesFormat << "\",\n";
  out << "  \"version\": " << kFormatVersion << ",\n";
  out << "  \"directed\": " << (f.directed ? "true" : "false") << ",\n";
  out << "  \"node_count\": " << f.node_count << ",\n";
  out << "  \"edges\": [";
  for (std::size_t i = 0; i < f.edges.size(); ++i) {
    const GeomEdge& e = f.edges[i];
    out << (i ? ",\n    " : "\n    ");
    out << "[" << e.src << ", " << e.dst << ", " << num17(e.length) << "]";
  }
  out << (f.edges.size() ? "\n  ]" : "]");
  out << "\n}\n";
  return out.str();
}

PointSetFile parse_point_set(const std::string& text) {
  const nlohmann::json j = parse_checked(text, kPointsFormat);
  if (!j.contains("points") || !j["points"].is_array()) {
    bad_file("missing \"points\" array");
  }
  std::vector<Point> pts;
  pts.reserve(j["points"].size());
  for (const auto& row : j["points"]) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number()) {
      bad_file("each point must be a two-number array");
    }
    const Point p{row[0].get<double>(), row[1].get<double>()};
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) bad_file("non-finite coordinate");
    pts.push_back(p);
  }

  PointSetFile f;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != pts.size()) {
      bad_file("\"labels\" must be an array with one entry per point");
    }
    std::vector<std::string> labels;
    labels.reserve(pts.size());
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) bad_file("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    f.points = PointSet(std::move(pts), std::move(labels));
  } else {
    f.points = PointSet(std::move(pts));
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) bad_file("\"metadata\" must be an object");
    for (const auto& [key, value] : j["metadata"].items()) {
      if (!value.is_string()) bad_file("metadata values must be strings");
      f.metadata[key] = value.get<std::string>();
    }
  }
  return f;
}

EdgeListFile parse_edge_list(const std::string& text) {
  const nlohmann::json j = parse_checked(text, kEdgesFormat);
  if (!j.contains("directed") || !j["directed"].is_boolean()) {
    bad_file("missing \"directed\" flag");
  }
  if (!j.contains("node_count") || !j["node_count"].is_number_integer() ||
      j["node_count"].get<long long>() < 0) {
    bad_file("missing or negative \"node_count\"");
  }
  if (!j.contains("edges") || !j["edges"].is_array()) {
    bad_file("missing \"edges\" array");
  }
  EdgeListFile f;
  f.directed = j["directed"].get<bool>();
  f.node_count = j["node_count"].get<int>();
  f.edges.reserve(j["edges"].size());
  for (const auto& row : j["edges"]) {
    if (!row.is_array() || row.size() != 3 || !row[0].is_number_integer() ||
        !row[1].is_number_integer() || !row[2].is_number()) {
      bad_file("each edge must be [source, target, length]");
    }
    GeomEdge e{row[0].get<int>(), row[1].get<int>(), row[2].get<double>()};
    if (e.src < 0 || e.src >= f.node_count || e.dst < 0 || e.dst >= f.node_count) {
      bad_file("edge index out of range");
    }
    if (e.src == e.dst) bad_file("self-loop edge");
    if (!std::isfinite(e.length) || e.length < 0.0) bad_file("bad edge length");
    f.edges.push_back(e);
  }
  return f;
}

PointSetFile read_point_set(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_point_set(buf.str());
}

EdgeListFile read_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_point_set(const std::string& path, const PointSetFile& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << serialize_point_set(f);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

void write_edge_list(const std::string& path, const EdgeListFile& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << serialize_edge_list(f);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

void validate_against(const EdgeListFile& edges, const PointSet& points) {
  if (edges.node_count != static_cast<int>(points.size())) {
    throw std::runtime_error("edge file is for " + std::to_string(edges.node_count) +
                             " nodes but the point set has " + std::to_string(points.size()));
  }
  for (const GeomEdge& e : edges.edges) {
    const double actual = euclid(points[e.src], points[e.dst]);
    if (std::fabs(actual - e.length) > 1e-12) {
      throw std::runtime_error("edge [" + std::to_string(e.src) + ", " +
                               std::to_string(e.dst) + "] stores length " + num17(e.length) +
                               " but the points are " + num17(actual) + " apart");
    }
  }
}

}  // namespace yaoconn
