// Copyright 2026 The Infperm Authors
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

#pragma once

#include <map>
#include <string>

#include "infperm/common.hpp"

namespace infperm {

//============================================================================
// Cardinal: a finite count or the first infinite cardinal.
// Addition and multiplication absorb into the infinite value, except that
// multiplying by zero annihilates it.
//============================================================================

struct Cardinal {
  bool finite = true;
  Int n = 0;  // meaningful when finite

  static Cardinal fin(Int k) {
    if (k < 0) fail(Errc::BadConstruction, "cardinal cannot be negative");
    return Cardinal{true, k};
  }
  static Cardinal inf() { return Cardinal{false, 0}; }

  bool is_zero() const { return finite && n == 0; }

  bool operator==(const Cardinal& o) const {
    return finite == o.finite && (!finite || n == o.n);
  }
  bool operator!=(const Cardinal& o) const { return !(*this == o); }

  friend bool leq(const Cardinal& a, const Cardinal& b) {
    if (!b.finite) return true;
    if (!a.finite) return false;
    return a.n <= b.n;
  }

  friend Cardinal operator+(const Cardinal& a, const Cardinal& b) {
    if (!a.finite || !b.finite) return inf();
    return fin(checked_add(a.n, b.n));
  }
  friend Cardinal operator*(const Cardinal& a, const Cardinal& b) {
    if (a.is_zero() || b.is_zero()) return fin(0);
    if (!a.finite || !b.finite) return inf();
    return fin(checked_mul(a.n, b.n));
  }

  std::string str() const { return finite ? std::to_string(n) : "w"; }
};

inline Cardinal lcm_cardinal(const Cardinal& a, const Cardinal& b) {
  if (!a.finite || !b.finite) return Cardinal::inf();
  if (a.n == 0 || b.n == 0) return Cardinal::fin(0);
  Int g = a.n, h = b.n;
  while (h != 0) {
    Int t = g % h;
    g = h;
    h = t;
  }
  return Cardinal::fin(checked_mul(a.n / g, b.n));
}

//============================================================================
// OrbitCensus: how many moved orbits of each size a permutation has.
// Finite orbit sizes are at least 2 (fixed points are not orbits of the
// support); the infinite-orbit count is tracked separately.
//============================================================================

struct OrbitCensus {
  std::map<Int, Cardinal> finite;  // orbit size (>=2) -> count
  Cardinal infinite = Cardinal::fin(0);

  void add_finite(Int size, Cardinal count) {
    if (size < 2) fail(Errc::BadConstruction, "orbit size must be at least 2");
    if (count.is_zero()) return;
    auto [it, fresh] = finite.emplace(size, count);
    if (!fresh) it->second = it->second + count;
  }
  void add_infinite(Cardinal count) { infinite = infinite + count; }

  bool empty() const { return finite.empty() && infinite.is_zero(); }

  // Total number of moved points.
  Cardinal support_cardinality() const {
    Cardinal total = Cardinal::fin(0);
    for (const auto& [size, count] : finite)
      total = total + Cardinal::fin(size) * count;
    if (!infinite.is_zero()) total = Cardinal::inf();
    return total;
  }

  // Total number of orbits.
  Cardinal orbit_count() const {
    Cardinal total = infinite;
    for (const auto& [size, count] : finite) total = total + count;
    return total;
  }

  bool operator==(const OrbitCensus& o) const {
    return finite == o.finite && infinite == o.infinite;
  }
};

}  // namespace infperm
