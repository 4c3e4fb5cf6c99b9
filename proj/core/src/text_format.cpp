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

#include "tropcx/text_format.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace tropcx {
namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool done() {
    skip_space();
    return pos_ == text_.size();
  }

  std::size_t number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an index");
    if (pos_ - start > 3) fail("index too large");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  // "{a,b,...}" with one-based indices in [1, limit].
  IndexSet subset(std::size_t limit) {
    expect('{');
    IndexSet out = 0;
    if (peek('}')) {
      ++pos_;
      return out;
    }
    for (;;) {
      const std::size_t v = number();
      if (v == 0 || v > limit) fail("index " + std::to_string(v) + " outside [1," + std::to_string(limit) + "]");
      if (contains(out, v - 1)) fail("repeated index " + std::to_string(v));
      out |= singleton(v - 1);
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect('}');
      return out;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "': " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<IndexSet> parse_tuple(std::string_view text, std::size_t limit, char separator) {
  Scanner scan(text);
  scan.expect('(');
  std::vector<IndexSet> items;
  for (;;) {
    items.push_back(scan.subset(limit));
    if (scan.peek(separator)) {
      scan.expect(separator);
      continue;
    }
    scan.expect(')');
    break;
  }
  if (!scan.done()) scan.fail("trailing characters");
  return items;
}

}  // namespace

std::string format_subset(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for_each_index(s, [&](std::size_t i) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  });
  return out + "}";
}

std::string format_type(const BoolMatrix& t) {
  std::string out = "(";
  const auto cols = t.columns();
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (j > 0) out += ',';
    out += format_subset(cols[j]);
  }
  return out + ")";
}

std::string format_partition(const OrderedSetPartition& p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) out += '|';
    out += format_subset(p.block(k));
  }
  return out + ")";
}

std::string format_point(const Point& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ',';
    out += x[i].to_string();
  }
  return out;
}

BoolMatrix parse_type(std::string_view text, std::size_t rows) {
  if (rows == 0 || rows > kMaxIndex) throw std::invalid_argument("parse_type: row count out of range");
  const auto cols = parse_tuple(text, rows, ',');
  if (cols.size() > kMaxIndex) throw std::invalid_argument("parse_type: too many columns");
  return BoolMatrix::from_columns(rows, cols);
}

OrderedSetPartition parse_partition(std::string_view text, std::size_t n) {
  if (n == 0 || n > kMaxIndex) throw std::invalid_argument("parse_partition: n out of range");
  return OrderedSetPartition(n, parse_tuple(text, n, '|'));
}

Point parse_point(std::string_view text) {
  Point out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    out.push_back(Rational::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace tropcx
