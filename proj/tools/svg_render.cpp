// Copyright 2026 The tropcx Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tropcx/text_format.hpp"

namespace tropcx::tools {
namespace {

struct Vec2 {
  double x;
  double y;
};

constexpr double kCanvasWidth = 640.0;

Vec2 plane_point(std::span<const Rational> v) {
  const Point p = project_to_plane(v);
  return {p[0].to_double(), p[1].to_double()};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

// SVG's y axis points down.
std::string coords(Vec2 p) { return num(p.x) + "," + num(-p.y); }

Vec2 vertex_position(const Arrangement& arr, const TypeCell& cell) {
  const auto x = realizing_point(arr, cell.type);
  if (!x) throw std::logic_error("vertex " + format_type(cell.type) + " has no realizing point");
  return plane_point(*x);
}

// Orders polygon corners counter-clockwise around their centroid.
std::vector<Vec2> convex_order(std::vector<Vec2> pts) {
  Vec2 c{0, 0};
  for (const auto& p : pts) {
    c.x += p.x;
    c.y += p.y;
  }
  c.x /= static_cast<double>(pts.size());
  c.y /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const Vec2& a, const Vec2& b) {
    return std::atan2(a.y - c.y, a.x - c.x) < std::atan2(b.y - c.y, b.x - c.x);
  });
  return pts;
}

// For a min-plus hyperplane in R^3, the branch where coordinates p and q tie
// for the minimum of y_k - a_k is swept out by raising the remaining
// coordinate r above the apex: y = a + t e_r, t >= 0.
Vec2 branch_direction(std::size_t r) {
  Point e(3, Rational(0));
  e[r] = Rational(1);
  const Vec2 d = plane_point(e);
  const double len = std::hypot(d.x, d.y);
  return {d.x / len, d.y / len};
}

}  // namespace

Viewport parse_viewport(std::string_view text) {
  std::vector<double> values;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad viewport value '" + item + "'");
    }
  }
  if (values.size() != 4) throw std::invalid_argument("viewport needs XMIN,XMAX,YMIN,YMAX");
  Viewport v{values[0], values[1], values[2], values[3]};
  if (!(v.xmin < v.xmax) || !(v.ymin < v.ymax)) throw std::invalid_argument("viewport is empty");
  return v;
}

std::string render_svg(const TropicalComplex& complex, const std::optional<Viewport>& viewport) {
  const Arrangement& arr = complex.arrangement();
  if (arr.rows() != 3) throw std::invalid_argument("rendering needs an arrangement with exactly 3 rows");

  std::vector<Vec2> apexes;
  for (std::size_t j = 0; j < arr.cols(); ++j) apexes.push_back(plane_point(arr.apex(j)));

  std::vector<std::pair<BoolMatrix, Vec2>> vertices;
  for (const auto& cell : complex.cells()) {
    if (cell.dimension == 0) vertices.emplace_back(cell.type, vertex_position(arr, cell));
  }
  auto corners_of = [&](const TypeCell& cell) {
    std::vector<Vec2> out;
    for (const auto& [type, pos] : vertices) {
      if (leq(cell.type, type)) out.push_back(pos);
    }
    return out;
  };

  Viewport vp{};
  if (viewport) {
    vp = *viewport;
  } else {
    vp = {apexes[0].x, apexes[0].x, apexes[0].y, apexes[0].y};
    auto grow = [&](Vec2 p) {
      vp.xmin = std::min(vp.xmin, p.x);
      vp.xmax = std::max(vp.xmax, p.x);
      vp.ymin = std::min(vp.ymin, p.y);
      vp.ymax = std::max(vp.ymax, p.y);
    };
    for (const auto& p : apexes) grow(p);
    for (const auto& v : vertices) grow(v.second);
    const double pad = std::max(1.0, 0.25 * std::max(vp.xmax - vp.xmin, vp.ymax - vp.ymin));
    vp = {vp.xmin - pad, vp.xmax + pad, vp.ymin - pad, vp.ymax + pad};
  }
  const double width = vp.xmax - vp.xmin;
  const double height = vp.ymax - vp.ymin;
  const double span = std::max(width, height);
  const double ray_length = 4.0 * std::hypot(width, height);
  const double stroke = span / 300.0;
  const double dot = span / 120.0;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kCanvasWidth)
      << "\" height=\"" << num(kCanvasWidth * height / width) << "\" viewBox=\"" << num(vp.xmin) << ' '
      << num(-vp.ymax) << ' ' << num(width) << ' ' << num(height) << "\">\n";
  svg << "  <rect class=\"background\" x=\"" << num(vp.xmin) << "\" y=\"" << num(-vp.ymax) << "\" width=\""
      << num(width) << "\" height=\"" << num(height) << "\" fill=\"white\"/>\n";

  svg << "  <g class=\"bounded-cells\" fill=\"#c8c8c8\" stroke=\"none\">\n";
  for (const auto& cell : complex.cells()) {
    if (cell.dimension != 2 || !cell.bounded) continue;
    svg << "    <polygon class=\"cell\" data-type=\"" << format_type(cell.type) << "\" points=\"";
    bool first = true;
    for (const auto& p : convex_order(corners_of(cell))) {
      if (!first) svg << ' ';
      svg << coords(p);
      first = false;
    }
    svg << "\"/>\n";
  }
  svg << "  </g>\n";

  svg << "  <g class=\"bounded-edges\" stroke=\"#808080\" stroke-width=\"" << num(3 * stroke) << "\">\n";
  for (const auto& cell : complex.cells()) {
    if (cell.dimension != 1 || !cell.bounded) continue;
    const auto ends = corners_of(cell);
    if (ends.size() != 2) throw std::logic_error("bounded edge " + format_type(cell.type) + " lacks two endpoints");
    svg << "    <line class=\"edge\" data-type=\"" << format_type(cell.type) << "\" x1=\"" << num(ends[0].x)
        << "\" y1=\"" << num(-ends[0].y) << "\" x2=\"" << num(ends[1].x) << "\" y2=\"" << num(-ends[1].y)
        << "\"/>\n";
  }
  svg << "  </g>\n";

  svg << "  <g class=\"hyperplanes\" stroke=\"black\" stroke-width=\"" << num(stroke) << "\">\n";
  for (std::size_t j = 0; j < apexes.size(); ++j) {
    for (std::size_t r = 0; r < 3; ++r) {
      const Vec2 d = branch_direction(r);
      const Vec2 end{apexes[j].x + ray_length * d.x, apexes[j].y + ray_length * d.y};
      svg << "    <line class=\"ray\" data-hyperplane=\"" << j + 1 << "\" x1=\"" << num(apexes[j].x) << "\" y1=\""
          << num(-apexes[j].y) << "\" x2=\"" << num(end.x) << "\" y2=\"" << num(-end.y) << "\"/>\n";
    }
  }
  svg << "  </g>\n";

  svg << "  <g class=\"vertices\" fill=\"black\">\n";
  for (const auto& [type, pos] : vertices) {
    svg << "    <circle class=\"vertex\" data-type=\"" << format_type(type) << "\" cx=\"" << num(pos.x)
        << "\" cy=\"" << num(-pos.y) << "\" r=\"" << num(dot) << "\"/>\n";
  }
  svg << "  </g>\n";

  svg << "  <g class=\"apexes\" fill=\"#b00000\" font-family=\"sans-serif\" font-size=\"" << num(4 * dot) << "\">\n";
  for (std::size_t j = 0; j < apexes.size(); ++j) {
    svg << "    <circle class=\"apex\" cx=\"" << num(apexes[j].x) << "\" cy=\"" << num(-apexes[j].y) << "\" r=\""
        << num(1.5 * dot) << "\"/>\n";
    svg << "    <text class=\"apex-label\" x=\"" << num(apexes[j].x + 2 * dot) << "\" y=\""
        << num(-apexes[j].y - 2 * dot) << "\">" << j + 1 << "</text>\n";
  }
  svg << "  </g>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tropcx::tools
