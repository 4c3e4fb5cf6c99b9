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

#ifndef TROPCX_TOOLS_SVG_RENDER_HPP_
#define TROPCX_TOOLS_SVG_RENDER_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "tropcx/complex.hpp"

namespace tropcx::tools {

struct Viewport {
  double xmin;
  double xmax;
  double ymin;
  double ymax;
};

// "XMIN,XMAX,YMIN,YMAX". Throws std::invalid_argument.
Viewport parse_viewport(std::string_view text);

// Draws a complex in R^3 / R(1,1,1) through (v1 - v3, v2 - v3): three rays per
// hyperplane, filled bounded 2-cells, bounded 1-cells, vertices, and apexes
// labelled by column. Output depends only on the complex and the viewport.
// Throws std::invalid_argument unless the arrangement has exactly 3 rows.
std::string render_svg(const TropicalComplex& complex, const std::optional<Viewport>& viewport = std::nullopt);

}  // namespace tropcx::tools

#endif  // TROPCX_TOOLS_SVG_RENDER_HPP_
