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

#include "tropcx/difference_constraints.hpp"

#include <stdexcept>

namespace tropcx {
namespace {

// a + b * eps for an infinitesimal eps > 0.
struct LexWeight {
  Rational value;
  long eps = 0;

  friend bool operator<(const LexWeight& x, const LexWeight& y) {
    if (auto c = x.value <=> y.value; c != 0) return c < 0;
    return x.eps < y.eps;
  }
};

struct ActiveEdge {
  std::size_t from;
  std::size_t to;
  LexWeight weight;
};

}  // namespace

DifferenceSystem::DifferenceSystem(std::size_t unknowns) : n_(unknowns), edges_(unknowns * unknowns) {}

void DifferenceSystem::add(std::size_t lhs, std::size_t rhs, const Rational& bound, bool strict) {
  if (lhs >= n_ || rhs >= n_) throw std::out_of_range("difference constraint index out of range");
  if (lhs == rhs) {
    // x - x = 0 must satisfy the bound; record it as a self-loop check.
    const bool ok = strict ? bound.sign() > 0 : bound.sign() >= 0;
    if (!ok) {
      Edge& e = edge(lhs, lhs);
      e.present = true;
      e.bound = bound;
      e.strict = strict;
    }
    return;
  }
  Edge& e = edge(lhs, rhs);
  if (!e.present || bound < e.bound || (bound == e.bound && strict && !e.strict)) {
    e.present = true;
    e.bound = bound;
    e.strict = strict;
  }
}

void DifferenceSystem::add_equality(std::size_t a, std::size_t b, const Rational& value) {
  add(a, b, value);
  add(b, a, -value);
}

std::vector<DifferenceConstraint> DifferenceSystem::constraints() const {
  std::vector<DifferenceConstraint> out;
  for (std::size_t lhs = 0; lhs < n_; ++lhs) {
    for (std::size_t rhs = 0; rhs < n_; ++rhs) {
      const Edge& e = edge(lhs, rhs);
      if (e.present) out.push_back({lhs, rhs, e.bound, e.strict});
    }
  }
  return out;
}

std::optional<std::vector<Rational>> DifferenceSystem::solve() const {
  std::vector<ActiveEdge> active;
  for (std::size_t lhs = 0; lhs < n_; ++lhs) {
    if (edge(lhs, lhs).present) return std::nullopt;
    for (std::size_t rhs = 0; rhs < n_; ++rhs) {
      const Edge& e = edge(lhs, rhs);
      if (e.present) active.push_back({rhs, lhs, LexWeight{e.bound, e.strict ? -1L : 0L}});
    }
  }

  // Virtual source at distance 0 from every vertex.
  std::vector<LexWeight> dist(n_);
  bool changed = true;
  for (std::size_t round = 0; round <= n_ && changed; ++round) {
    changed = false;
    for (const ActiveEdge& e : active) {
      LexWeight candidate{dist[e.from].value + e.weight.value, dist[e.from].eps + e.weight.eps};
      if (candidate < dist[e.to]) {
        dist[e.to] = std::move(candidate);
        changed = true;
      }
    }
    if (changed && round == n_) return std::nullopt;
  }

  // Replace eps by a concrete positive rational small enough that every
  // constraint stays satisfied.
  Rational eps(1);
  for (const ActiveEdge& e : active) {
    const Rational slack = e.weight.value - (dist[e.to].value - dist[e.from].value);
    const long growth = dist[e.to].eps - dist[e.from].eps;
    if (slack.sign() > 0 && growth > 0) {
      const Rational limit = slack / Rational(2 * growth);
      if (limit < eps) eps = limit;
    }
  }

  std::vector<Rational> x;
  x.reserve(n_);
  for (const LexWeight& d : dist) x.push_back(d.value + eps * Rational(d.eps));
  return x;
}

bool satisfies(const std::vector<Rational>& x, const std::vector<DifferenceConstraint>& constraints) {
  for (const auto& c : constraints) {
    const Rational diff = x.at(c.lhs) - x.at(c.rhs);
    if (c.strict ? !(diff < c.bound) : !(diff <= c.bound)) return false;
  }
  return true;
}

}  // namespace tropcx
