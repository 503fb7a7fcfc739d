#include "yaoconn/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "yaoconn/geometry.hpp"

namespace yaoconn {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 0.05 * kCanvas;

constexpr const char* kStrokes[] = {"#9aa0a6", "#1f77b4", "#d62728",
                                    "#2ca02c", "#9467bd", "#ff7f0e"};
constexpr int kStrokeCount = 6;

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const PointSet& points, const std::vector<EdgeLayer>& layers,
                       bool draw_labels) {
  const int n = static_cast<int>(points.size());
  for (std::size_t li = 0; li < layers.size(); ++li) {
    for (const GeomEdge& e : layers[li].edges) {
      if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n) {
        throw std::invalid_argument("render_svg: layer " + std::to_string(li) +
                                    " addresses node outside 0.." + std::to_string(n - 1));
      }
      if (std::fabs(euclid(points[e.src], points[e.dst]) - e.length) > 1e-12) {
        throw std::invalid_argument("render_svg: layer " + std::to_string(li) +
                                    " edge length disagrees with point coordinates");
      }
    }
  }

  // Aspect-preserving, y-up to y-down map onto the canvas interior.
  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  if (n > 0) {
    min_x = max_x = points[0].x;
    min_y = max_y = points[0].y;
    for (int i = 1; i < n; ++i) {
      min_x = std::min(min_x, points[i].x);
      max_x = std::max(max_x, points[i].x);
      min_y = std::min(min_y, points[i].y);
      max_y = std::max(max_y, points[i].y);
    }
  }
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double scale = span > 0.0 ? (kCanvas - 2.0 * kMargin) / span : 1.0;
  const double cx = (min_x + max_x) / 2.0, cy = (min_y + max_y) / 2.0;
  auto map_x = [&](double x) { return kCanvas / 2.0 + (x - cx) * scale; };
  auto map_y = [&](double y) { return kCanvas / 2.0 - (y - cy) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  out << "<rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
  for (std::size_t li = 0; li < layers.size(); ++li) {
    const char* stroke = kStrokes[li % kStrokeCount];
    const char* width = li == 0 ? "1.2" : "2.0";
    out << "<g stroke=\"" << stroke << "\" stroke-width=\"" << width
        << "\" stroke-linecap=\"round\">\n";
    for (const GeomEdge& e : layers[li].edges) {
      out << "  <line x1=\"" << px(map_x(points[e.src].x)) << "\" y1=\""
          << px(map_y(points[e.src].y)) << "\" x2=\"" << px(map_x(points[e.dst].x))
          << "\" y2=\"" << px(map_y(points[e.dst].y)) << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "<g fill=\"#111111\">\n";
  for (int i = 0; i < n; ++i) {
    out << "  <circle cx=\"" << px(map_x(points[i].x)) << "\" cy=\""
        << px(map_y(points[i].y)) << "\" r=\"3.5\"/>\n";
  }
  out << "</g>\n";
  if (draw_labels && points.has_labels()) {
    out << "<g font-family=\"monospace\" font-size=\"14\" fill=\"#333333\">\n";
    for (int i = 0; i < n; ++i) {
      std::string text = points.label(i);
      std::string escaped;
      for (char ch : text) {
        if (ch == '&') escaped += "&amp;";
        else if (ch == '<') escaped += "&lt;";
        else if (ch == '>') escaped += "&gt;";
        else escaped += ch;
      }
      out << "  <text x=\"" << px(map_x(points[i].x) + 6.0) << "\" y=\""
          << px(map_y(points[i].y) - 6.0) << "\">" << escaped << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace yaoconn
