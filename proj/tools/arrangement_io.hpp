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

#ifndef TROPCX_TOOLS_ARRANGEMENT_IO_HPP_
#define TROPCX_TOOLS_ARRANGEMENT_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"
#include "tropcx/complex.hpp"
#include "tropcx/tropical.hpp"

namespace tropcx::tools {

// Arrangement file:
//   { "rows": n, "cols": d, "entries": [["-8", "10", ...], ...] }
// Entries are rational strings; plain JSON integers are accepted too.
// Malformed input throws std::invalid_argument.
Arrangement parse_arrangement(std::string_view json_text);
Arrangement read_arrangement_file(const std::string& path);
nlohmann::json arrangement_to_json(const Arrangement& arr);

// Complex report:
//   { "cells": [ { "type": [[2], [1, 2], ...], "dimension": 0, "bounded": true }, ... ],
//     "summary": { "0": 7, "1": 18, "2": 12 } }
// Cells follow the canonical order of enumerate_types; row indices are
// one-based.
nlohmann::json complex_report(const TropicalComplex& complex);
std::string complex_report_text(const TropicalComplex& complex);

}  // namespace tropcx::tools

#endif  // TROPCX_TOOLS_ARRANGEMENT_IO_HPP_
