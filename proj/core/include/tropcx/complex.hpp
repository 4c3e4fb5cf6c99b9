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

#ifndef TROPCX_COMPLEX_HPP_
#define TROPCX_COMPLEX_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "tropcx/bool_matrix.hpp"
#include "tropcx/face_monoid.hpp"
#include "tropcx/permanent.hpp"
#include "tropcx/tropical.hpp"

namespace tropcx {

// Default bound on n * d for enumerate_types (2^24 raw candidates).
inline constexpr std::size_t kDefaultEnumerationCap = 24;

// A cell of the tropical complex, labelled by its type.
struct TypeCell {
  BoolMatrix type;
  std::size_t dimension = 0;  // in tropical projective space R^n / R(1,...,1)
  bool bounded = false;

  friend bool operator==(const TypeCell&, const TypeCell&) = default;
  // Canonical order: by dimension, then by type.
  friend std::strong_ordering operator<=>(const TypeCell& a, const TypeCell& b);
};

// Combinatorial type test from the permanent structure alone:
//   every column of S is non-empty;
//   every partial bijection contained in S is permanent-attaining;
//   whenever S contains a bijection J -> I, it contains every optimal
//   bijection J -> I.
// Throws std::invalid_argument on a shape mismatch or when the structure does
// not cover bijections of size min(n, d).
bool is_type(const PermanentStructure& perm, const BoolMatrix& s);

// Number of connected components of the tie graph on [n] (rows i, k joined
// when they share a column of T), minus one.
std::size_t tie_dimension(const BoolMatrix& t);

// As tie_dimension, after checking that T is a type. Throws
// std::invalid_argument otherwise.
std::size_t cell_dimension(const PermanentStructure& perm, const BoolMatrix& t);

// Every row of T is non-empty.
bool is_bounded(const BoolMatrix& t);

// True iff `face` is a face of `cell`, i.e. cell.type <= face.type.
bool face_relation(const TypeCell& cell, const TypeCell& face);

// Decorates a type with its dimension and boundedness. Throws
// std::invalid_argument when T is not a type.
TypeCell make_cell(const PermanentStructure& perm, const BoolMatrix& t);

// The cell with type T o P. Aborts the process if the result is not a type,
// which would mean the library is broken.
TypeCell act_on_type(const PermanentStructure& perm, const TypeCell& cell, const OrderedSetPartition& p);

// Every type of the arrangement in canonical order. Throws
// std::length_error when n * d exceeds cap.
std::vector<TypeCell> enumerate_types(const PermanentStructure& perm,
                                      std::size_t cap = kDefaultEnumerationCap);
std::vector<TypeCell> enumerate_types(const Arrangement& arr, std::size_t cap = kDefaultEnumerationCap);

// The face poset of an arrangement with its permanent structure.
class TropicalComplex {
 public:
  explicit TropicalComplex(const Arrangement& arr, std::size_t cap = kDefaultEnumerationCap);

  const Arrangement& arrangement() const { return perm_.arrangement(); }
  const PermanentStructure& permanent() const { return perm_; }
  const std::vector<TypeCell>& cells() const { return cells_; }

  std::optional<TypeCell> find(const BoolMatrix& type) const;
  bool contains(const BoolMatrix& type) const { return find(type).has_value(); }

  // Cell count per dimension.
  std::map<std::size_t, std::size_t> counts_by_dimension() const;

  // Cells of which `cell` is a face, and the faces of `cell`.
  std::vector<TypeCell> cofaces(const TypeCell& cell) const;
  std::vector<TypeCell> faces(const TypeCell& cell) const;

 private:
  PermanentStructure perm_;
  std::vector<TypeCell> cells_;
};

}  // namespace tropcx

#endif  // TROPCX_COMPLEX_HPP_
