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

#ifndef TROPCX_TEXT_FORMAT_HPP_
#define TROPCX_TEXT_FORMAT_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "tropcx/bool_matrix.hpp"
#include "tropcx/face_monoid.hpp"
#include "tropcx/tropical.hpp"

// Text forms with one-based indices:
//   subset     "{1,3}"  ("{}" is the empty set)
//   type       "({2},{1,2},{1},{1,3})"  columns left to right
//   partition  "({1,3}|{2})"            blocks left to right
//   point      "0,-1/2,3"
// Whitespace between tokens is ignored. Parse errors throw
// std::invalid_argument.

namespace tropcx {

std::string format_subset(IndexSet s);
std::string format_type(const BoolMatrix& t);
std::string format_partition(const OrderedSetPartition& p);
std::string format_point(const Point& x);

BoolMatrix parse_type(std::string_view text, std::size_t rows);
OrderedSetPartition parse_partition(std::string_view text, std::size_t n);
Point parse_point(std::string_view text);

}  // namespace tropcx

#endif  // TROPCX_TEXT_FORMAT_HPP_
