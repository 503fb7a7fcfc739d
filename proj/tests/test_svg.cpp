#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "yaoconn/svg.hpp"

using namespace yaoconn;

namespace {

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE("svg") {

TEST_CASE("points map onto the canvas with its 5% margin") {
  const PointSet s({Point{0, 0}, Point{1, 0}});
  const std::string svg = render_svg(s, {});
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") == 0);
  CHECK(count_occurrences(svg, "<circle") == 2);
  // Horizontal span fills the drawable width: margins at 40 and 760, with
  // the flat dimension centered at 400.
  CHECK(svg.find("cx=\"40.000\" cy=\"400.000\"") != std::string::npos);
  CHECK(svg.find("cx=\"760.000\" cy=\"400.000\"") != std::string::npos);
}

TEST_CASE("the vertical axis is flipped") {
  const PointSet s({Point{0, 0}, Point{0, 1}});
  const std::string svg = render_svg(s, {});
  // Higher y in the plane means smaller y on the canvas.
  CHECK(svg.find("cx=\"400.000\" cy=\"760.000\"") != std::string::npos);  // (0,0)
  CHECK(svg.find("cx=\"400.000\" cy=\"40.000\"") != std::string::npos);   // (0,1)
}

TEST_CASE("layers draw in order with distinct strokes") {
  const PointSet s({Point{0, 0}, Point{1, 0}, Point{0, 1}});
  EdgeLayer base;
  base.edges = {GeomEdge{0, 1, 1.0}, GeomEdge{0, 2, 1.0}};
  EdgeLayer top;
  top.edges = {GeomEdge{0, 1, 1.0}};
  const std::string svg = render_svg(s, {base, top});
  const std::size_t g1 = svg.find("stroke=\"#9aa0a6\"");
  const std::size_t g2 = svg.find("stroke=\"#1f77b4\"");
  REQUIRE(g1 != std::string::npos);
  REQUIRE(g2 != std::string::npos);
  CHECK(g1 < g2);  // base layer painted first, highlight layer on top
  CHECK(count_occurrences(svg, "<line") == 3);
  // Base layer is thin, later layers are thick.
  CHECK(svg.find("stroke-width=\"1.2\"") < svg.find("stroke-width=\"2.0\""));
}

TEST_CASE("labels are optional and XML-escaped") {
  const PointSet s({Point{0, 0}, Point{1, 0}}, {"p<1>", "q&r"});
  const std::string no_labels = render_svg(s, {}, false);
  CHECK(count_occurrences(no_labels, "<text") == 0);

  const std::string with_labels = render_svg(s, {}, true);
  CHECK(count_occurrences(with_labels, "<text") == 2);
  CHECK(with_labels.find("p&lt;1&gt;") != std::string::npos);
  CHECK(with_labels.find("q&amp;r") != std::string::npos);

  // Asking for labels on an unlabeled set simply draws none.
  const PointSet bare({Point{0, 0}, Point{1, 0}});
  CHECK(count_occurrences(render_svg(bare, {}, true), "<text") == 0);
}

TEST_CASE("rendering is deterministic") {
  const PointSet s({Point{0.123, 4.56}, Point{-7.89, 0.12}, Point{3.0, 3.0}});
  EdgeLayer layer;
  layer.edges = {GeomEdge{0, 1, euclid(s[0], s[1])}};
  CHECK(render_svg(s, {layer}, false) == render_svg(s, {layer}, false));
}

TEST_CASE("degenerate inputs still render") {
  CHECK(render_svg(PointSet{}, {}).find("</svg>") != std::string::npos);
  const std::string one = render_svg(PointSet({Point{5, 5}}), {});
  CHECK(count_occurrences(one, "<circle") == 1);
  CHECK(one.find("cx=\"400.000\" cy=\"400.000\"") != std::string::npos);
}

TEST_CASE("edges are validated against the points") {
  const PointSet s({Point{0, 0}, Point{1, 0}});
  EdgeLayer bad_index;
  bad_index.edges = {GeomEdge{0, 2, 1.0}};
  CHECK_THROWS_AS(render_svg(s, {bad_index}), std::invalid_argument);

  EdgeLayer bad_length;
  bad_length.edges = {GeomEdge{0, 1, 1.5}};
  CHECK_THROWS_AS(render_svg(s, {bad_length}), std::invalid_argument);
}

}  // TEST_SUITE
