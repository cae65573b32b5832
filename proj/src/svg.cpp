// Copyright 2026 The Entanglemetry Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entanglemetry/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>

namespace entanglemetry {

namespace {

constexpr double kPanel = 320.0;
constexpr double kMargin = 40.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string render_quadrilaterals_svg(std::span<const QuadrilateralGeometry> quads,
                                      std::string_view caption) {
  // Shared scale so the panels are comparable.
  double extent = 1e-9;
  for (const auto& q : quads) {
    for (const auto& v : q.vertices) {
      extent = std::max({extent, std::abs(v.x), std::abs(v.y), std::abs(v.x - q.diagonal)});
    }
    extent = std::max(extent, q.diagonal);
  }
  const double scale = (kPanel - 2.0 * kMargin) / (1.5 * extent);
  const double width = kPanel * static_cast<double>(std::max<std::size_t>(quads.size(), 1));
  const double height = kPanel + 40.0;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fmt(width / 2) + "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\">" + escape(caption) + "</text>\n";

  for (std::size_t k = 0; k < quads.size(); ++k) {
    const auto& q = quads[k];
    const double ox = static_cast<double>(k) * kPanel + (kPanel - scale * q.diagonal) / 2.0;
    const double oy = 40.0 + kPanel / 2.0;
    auto px = [&](const Point& p) { return ox + scale * p.x; };
    auto py = [&](const Point& p) { return oy - scale * p.y; };

    std::string points;
    for (const auto& v : q.vertices) points += fmt(px(v)) + "," + fmt(py(v)) + " ";
    svg += "<g id=\"quad-" + std::to_string(k) + "\">\n";
    svg += "<polygon points=\"" + points + "\" fill=\"#ffffaa\" fill-opacity=\"0.83\" "
           "stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg += "<line x1=\"" + fmt(px(q.vertices[0])) + "\" y1=\"" + fmt(py(q.vertices[0])) + "\" x2=\"" +
           fmt(px(q.vertices[2])) + "\" y2=\"" + fmt(py(q.vertices[2])) +
           "\" stroke=\"#4a90e2\" stroke-width=\"1.5\" stroke-dasharray=\"5,3\"/>\n";

    // Edges in cyclic order: P0-apex1 (i), apex1-P1 (j), P1-apex2 (l), apex2-P0 (k).
    const std::array<std::pair<int, int>, 4> edges{{{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    const std::array<std::size_t, 4> side_of_edge{0, 1, 3, 2};
    for (std::size_t e = 0; e < 4; ++e) {
      const Point& a = q.vertices[static_cast<std::size_t>(edges[e].first)];
      const Point& b = q.vertices[static_cast<std::size_t>(edges[e].second)];
      const Point mid{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
      const double lift = (e < 2 ? 12.0 : -6.0);
      const std::size_t s = side_of_edge[e];
      svg += "<text x=\"" + fmt(px(mid)) + "\" y=\"" + fmt(py(mid) - lift) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
             escape(q.side_cuts[s].label()) + " " + fmt(q.sides[s]) + "</text>\n";
    }
    const std::string degenerate = q.degenerate[0] || q.degenerate[1] ? " (degenerate)" : "";
    svg += "<text x=\"" + fmt(static_cast<double>(k) * kPanel + kPanel / 2.0) + "\" y=\"" +
           fmt(height - 10.0) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\" fill=\"#4a90e2\">diagonal " + escape(q.diagonal_cut.label()) + " = " +
           fmt(q.diagonal) + degenerate + "</text>\n";
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace entanglemetry
