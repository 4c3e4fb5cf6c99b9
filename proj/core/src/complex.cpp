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

#include "tropcx/complex.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tropcx/text_format.hpp"

namespace tropcx {
namespace {

void check_coverage(const PermanentStructure& perm, const BoolMatrix& s) {
  const Arrangement& arr = perm.arrangement();
  if (s.rows() != arr.rows() || s.cols() != arr.cols()) {
    throw std::invalid_argument("boolean matrix shape does not match the arrangement");
  }
  if (perm.k_max() < std::min(arr.rows(), arr.cols())) {
    throw std::invalid_argument("permanent structure does not cover bijections of size min(n, d)");
  }
}

// Checks one contained bijection against the attaining and closure
// conditions.
bool bijection_ok(const PermanentStructure& perm, const PartialBijection& sigma, const BoolMatrix& s) {
  if (sigma.empty()) return true;
  if (!perm.is_attaining(sigma)) return false;
  for (const auto& tau : perm.optimal(sigma.image(), sigma.domain())) {
    if (!tau.contained_in(s)) return false;
  }
  return true;
}

// Column-by-column search. A prefix of columns can only extend to a type if
// every bijection whose domain lies in the prefix passes bijection_ok, so
// each new column is checked against the bijections that use it.
class TypeSearch {
 public:
  explicit TypeSearch(const PermanentStructure& perm)
      : perm_(perm), n_(perm.arrangement().rows()), d_(perm.arrangement().cols()), columns_(d_, 0) {}

  std::vector<BoolMatrix> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  void descend(std::size_t j) {
    if (j == d_) {
      found_.push_back(BoolMatrix::from_columns(n_, columns_));
      return;
    }
    // Bijections of the prefix, columns 0..j-1.
    std::vector<PartialBijection> prefix;
    if (j > 0) {
      std::vector<IndexSet> cols(columns_.begin(), columns_.begin() + static_cast<std::ptrdiff_t>(j));
      for_each_contained_partial_bijection(BoolMatrix::from_columns(n_, cols),
                                           [&](const PartialBijection& s) {
                                             prefix.push_back(s);
                                             return true;
                                           });
    } else {
      prefix.emplace_back();
    }

    for (IndexSet candidate = 1; candidate <= full_set(n_); ++candidate) {
      columns_[j] = candidate;
      std::vector<IndexSet> cols(columns_.begin(), columns_.begin() + static_cast<std::ptrdiff_t>(j + 1));
      cols.resize(d_, 0);
      const BoolMatrix partial = BoolMatrix::from_columns(n_, cols);
      if (extends(prefix, candidate, j, partial)) descend(j + 1);
      if (candidate == full_set(n_)) break;
    }
    columns_[j] = 0;
  }

  bool extends(const std::vector<PartialBijection>& prefix, IndexSet candidate, std::size_t j,
               const BoolMatrix& partial) const {
    for (const auto& base : prefix) {
      const IndexSet free_rows = candidate & ~base.image();
      bool ok = true;
      for_each_index(free_rows, [&](std::size_t r) {
        if (ok) ok = bijection_ok(perm_, base.with(r, j), partial);
      });
      if (!ok) return false;
    }
    return true;
  }

  const PermanentStructure& perm_;
  std::size_t n_;
  std::size_t d_;
  std::vector<IndexSet> columns_;
  std::vector<BoolMatrix> found_;
};

}  // namespace

std::strong_ordering operator<=>(const TypeCell& a, const TypeCell& b) {
  if (auto c = a.dimension <=> b.dimension; c != 0) return c;
  if (auto c = a.type <=> b.type; c != 0) return c;
  return a.bounded <=> b.bounded;
}

bool is_type(const PermanentStructure& perm, const BoolMatrix& s) {
  check_coverage(perm, s);
  if (s.has_empty_column()) return false;
  return for_each_contained_partial_bijection(
      s, [&](const PartialBijection& sigma) { return bijection_ok(perm, sigma, s); });
}

std::size_t tie_dimension(const BoolMatrix& t) {
  const std::size_t n = t.rows();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = n;
  for (IndexSet col : t.columns()) {
    if (col == 0) continue;
    const std::size_t first = find(static_cast<std::size_t>(std::countr_zero(col)));
    for_each_index(col, [&](std::size_t i) {
      const std::size_t root = find(i);
      if (root != first) {
        parent[root] = first;
        --components;
      }
    });
  }
  return components - 1;
}

std::size_t cell_dimension(const PermanentStructure& perm, const BoolMatrix& t) {
  if (!is_type(perm, t)) throw std::invalid_argument("cell_dimension: " + format_type(t) + " is not a type");
  return tie_dimension(t);
}

bool is_bounded(const BoolMatrix& t) { return !t.has_empty_row(); }

bool face_relation(const TypeCell& cell, const TypeCell& face) { return leq(cell.type, face.type); }

TypeCell make_cell(const PermanentStructure& perm, const BoolMatrix& t) {
  if (!is_type(perm, t)) throw std::invalid_argument(format_type(t) + " is not a type");
  return TypeCell{t, tie_dimension(t), is_bounded(t)};
}

TypeCell act_on_type(const PermanentStructure& perm, const TypeCell& cell, const OrderedSetPartition& p) {
  BoolMatrix moved = act_matrix(cell.type, p);
  if (!is_type(perm, moved)) {
    std::fprintf(stderr, "tropcx: fatal: %s acted on by %s is not a type\n", format_type(cell.type).c_str(),
                 format_partition(p).c_str());
    std::abort();
  }
  const std::size_t dim = tie_dimension(moved);
  const bool bounded = is_bounded(moved);
  return TypeCell{std::move(moved), dim, bounded};
}

std::vector<TypeCell> enumerate_types(const PermanentStructure& perm, std::size_t cap) {
  const Arrangement& arr = perm.arrangement();
  if (arr.rows() * arr.cols() > cap) {
    throw std::length_error("enumerate_types: n*d = " + std::to_string(arr.rows() * arr.cols()) +
                            " exceeds the cap of " + std::to_string(cap));
  }
  if (perm.k_max() < std::min(arr.rows(), arr.cols())) {
    throw std::invalid_argument("permanent structure does not cover bijections of size min(n, d)");
  }
  std::vector<TypeCell> out;
  for (BoolMatrix& t : TypeSearch(perm).run()) {
    const std::size_t dim = tie_dimension(t);
    const bool bounded = is_bounded(t);
    out.push_back(TypeCell{std::move(t), dim, bounded});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TypeCell> enumerate_types(const Arrangement& arr, std::size_t cap) {
  if (arr.rows() * arr.cols() > cap) {
    throw std::length_error("enumerate_types: n*d = " + std::to_string(arr.rows() * arr.cols()) +
                            " exceeds the cap of " + std::to_string(cap));
  }
  return enumerate_types(permanent_structure(arr), cap);
}

TropicalComplex::TropicalComplex(const Arrangement& arr, std::size_t cap)
    : perm_(permanent_structure(arr)), cells_(enumerate_types(perm_, cap)) {}

std::optional<TypeCell> TropicalComplex::find(const BoolMatrix& type) const {
  for (const auto& c : cells_) {
    if (c.type == type) return c;
  }
  return std::nullopt;
}

std::map<std::size_t, std::size_t> TropicalComplex::counts_by_dimension() const {
  std::map<std::size_t, std::size_t> out;
  for (const auto& c : cells_) ++out[c.dimension];
  return out;
}

std::vector<TypeCell> TropicalComplex::cofaces(const TypeCell& cell) const {
  std::vector<TypeCell> out;
  for (const auto& c : cells_) {
    if (face_relation(c, cell)) out.push_back(c);
  }
  return out;
}

std::vector<TypeCell> TropicalComplex::faces(const TypeCell& cell) const {
  std::vector<TypeCell> out;
  for (const auto& c : cells_) {
    if (face_relation(cell, c)) out.push_back(c);
  }
  return out;
}

}  // namespace tropcx
