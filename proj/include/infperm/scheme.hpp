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

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "infperm/cardinal.hpp"
#include "infperm/indexer.hpp"
#include "infperm/seq.hpp"

namespace infperm {

//============================================================================
// OrbitFamily: one batch of orbits sharing a shape.
//
//   fin_cycle         a single explicit finite cycle (x1 x2 ... xc), c >= 2
//   fin_cycle_family  infinitely many length-L cycles, one per rows() row
//   inf_cycle         a single bi-infinite orbit given by a Z-enumeration
//   inf_cycle_family  infinitely many bi-infinite orbits, one per grid() row
//
// Batch kinds advance along their row; `reversed` runs every row backwards,
// which is how such families are inverted (row reversal is not expressible
// as a rewrite of the indexer itself).
//============================================================================

enum class FamilyKind { FinCycle, FinCycleFamily, InfCycle, InfCycleFamily };

class OrbitFamily {
 public:
  static OrbitFamily fin_cycle(std::vector<Int> cycle) {
    if (cycle.size() < 2)
      fail(Errc::BadConstruction, "finite cycle needs at least two points");
    std::vector<Int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Errc::BadConstruction, "finite cycle has repeated points");
    // Canonical rotation: smallest point first.
    auto mn = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), mn, cycle.end());
    OrbitFamily f(FamilyKind::FinCycle);
    f.cycle_ = std::move(cycle);
    return f;
  }

  static OrbitFamily fin_cycle_family(Int length, Indexer2 indexer,
                                      bool reversed = false) {
    if (length < 2)
      fail(Errc::BadConstruction, "cycle family length must be at least 2");
    if (indexer.kind() != IndexerKind::Rows)
      fail(Errc::BadConstruction, "finite cycle family needs a rows indexer");
    if (indexer.row_length() != length)
      fail(Errc::BadConstruction,
           "cycle family length must match indexer row length");
    OrbitFamily f(FamilyKind::FinCycleFamily);
    f.length_ = length;
    f.indexer_.emplace(std::move(indexer));
    f.reversed_ = reversed;
    return f;
  }

  static OrbitFamily inf_cycle(Sequence enumeration) {
    if (!(enumeration.domain() == Domain::integers()))
      fail(Errc::BadConstruction, "infinite cycle enumeration must be over int");
    OrbitFamily f(FamilyKind::InfCycle);
    f.enumeration_.emplace(std::move(enumeration));
    return f;
  }

  static OrbitFamily inf_cycle_family(Indexer2 indexer, bool reversed = false) {
    if (indexer.kind() != IndexerKind::Grid)
      fail(Errc::BadConstruction, "infinite cycle family needs a grid indexer");
    OrbitFamily f(FamilyKind::InfCycleFamily);
    f.indexer_.emplace(std::move(indexer));
    f.reversed_ = reversed;
    return f;
  }

  FamilyKind kind() const { return kind_; }
  const std::vector<Int>& cycle() const { return cycle_; }
  Int length() const { return length_; }
  const Indexer2& indexer() const { return *indexer_; }
  const Sequence& enumeration() const { return *enumeration_; }
  bool reversed() const { return reversed_; }

  // Image of x under this family, if x lies on one of its orbits.
  std::optional<Int> image(Int x) const {
    switch (kind_) {
      case FamilyKind::FinCycle: {
        for (size_t i = 0; i < cycle_.size(); ++i)
          if (cycle_[i] == x) return cycle_[(i + 1) % cycle_.size()];
        return std::nullopt;
      }
      case FamilyKind::FinCycleFamily: {
        auto cell = indexer_->locate(x);
        if (!cell) return std::nullopt;
        auto [k, j] = *cell;
        Int jn = reversed_ ? floor_mod(j - 1, length_) : (j + 1) % length_;
        return indexer_->eval(k, jn);
      }
      case FamilyKind::InfCycle: {
        auto i = enumeration_->locate(x);
        if (!i) return std::nullopt;
        return enumeration_->eval(checked_add(*i, 1));
      }
      case FamilyKind::InfCycleFamily: {
        auto cell = indexer_->locate(x);
        if (!cell) return std::nullopt;
        auto [k, i] = *cell;
        return indexer_->eval(k, reversed_ ? checked_add(i, -1)
                                           : checked_add(i, 1));
      }
    }
    return std::nullopt;
  }

  bool contains(Int x) const {
    switch (kind_) {
      case FamilyKind::FinCycle:
        return std::find(cycle_.begin(), cycle_.end(), x) != cycle_.end();
      case FamilyKind::InfCycle: return enumeration_->locate(x).has_value();
      default: return indexer_->locate(x).has_value();
    }
  }

  OrbitFamily inverse() const {
    switch (kind_) {
      case FamilyKind::FinCycle: {
        std::vector<Int> rev(cycle_.rbegin(), cycle_.rend());
        return fin_cycle(std::move(rev));
      }
      case FamilyKind::FinCycleFamily:
        return fin_cycle_family(length_, *indexer_, !reversed_);
      case FamilyKind::InfCycle:
        return inf_cycle(seq_reverse_int(*enumeration_));
      case FamilyKind::InfCycleFamily:
        return inf_cycle_family(*indexer_, !reversed_);
    }
    fail(Errc::BadConstruction, "unreachable family kind");
  }

  // Orbit sizes contributed to the census.
  void census_into(OrbitCensus& c) const {
    switch (kind_) {
      case FamilyKind::FinCycle:
        c.add_finite(static_cast<Int>(cycle_.size()), Cardinal::fin(1));
        break;
      case FamilyKind::FinCycleFamily:
        c.add_finite(length_, Cardinal::inf());
        break;
      case FamilyKind::InfCycle: c.add_infinite(Cardinal::fin(1)); break;
      case FamilyKind::InfCycleFamily: c.add_infinite(Cardinal::inf()); break;
    }
  }

  Cardinal cycle_length() const {
    switch (kind_) {
      case FamilyKind::FinCycle:
        return Cardinal::fin(static_cast<Int>(cycle_.size()));
      case FamilyKind::FinCycleFamily: return Cardinal::fin(length_);
      default: return Cardinal::inf();
    }
  }

  bool operator==(const OrbitFamily& o) const {
    if (kind_ != o.kind_ || reversed_ != o.reversed_) return false;
    switch (kind_) {
      case FamilyKind::FinCycle: return cycle_ == o.cycle_;
      case FamilyKind::FinCycleFamily:
        return length_ == o.length_ && *indexer_ == *o.indexer_;
      case FamilyKind::InfCycle: return *enumeration_ == *o.enumeration_;
      case FamilyKind::InfCycleFamily: return *indexer_ == *o.indexer_;
    }
    return false;
  }

 private:
  explicit OrbitFamily(FamilyKind k) : kind_(k) {}

  FamilyKind kind_;
  std::vector<Int> cycle_;
  Int length_ = 0;
  std::optional<Indexer2> indexer_;
  std::optional<Sequence> enumeration_;
  bool reversed_ = false;
};

//============================================================================
// Scheme: a permutation of Z presented as finitely many orbit families plus
// an optional explicit enumeration of (part of) the fixed complement.
// Points not on any listed orbit are fixed.
//============================================================================

struct Scheme {
  std::optional<std::string> name;
  std::vector<OrbitFamily> families;
  std::optional<Sequence> fixed_set;

  Int apply(Int x) const {
    for (const auto& fam : families)
      if (auto y = fam.image(x)) return *y;
    return x;
  }

  Scheme inverse() const {
    Scheme inv;
    inv.name = name;
    inv.fixed_set = fixed_set;
    inv.families.reserve(families.size());
    for (const auto& fam : families) inv.families.push_back(fam.inverse());
    return inv;
  }

  OrbitCensus orbit_census() const {
    OrbitCensus c;
    for (const auto& fam : families) fam.census_into(c);
    return c;
  }

  bool moves(Int x) const {
    for (const auto& fam : families)
      if (fam.contains(x)) return true;
    return false;
  }

  bool fixed_set_is_finite() const {
    return fixed_set && !fixed_set->domain().is_infinite();
  }
  bool fixed_set_is_infinite() const {
    return fixed_set && fixed_set->domain().is_infinite();
  }

  //------------------------------------------------------------ validation --
  ValidationReport validate(Int window) const {
    ValidationReport rep;
    for (size_t t = 0; t < families.size(); ++t) {
      const auto& fam = families[t];
      ValidationReport sub;
      switch (fam.kind()) {
        case FamilyKind::FinCycle: break;  // checked at construction
        case FamilyKind::FinCycleFamily:
        case FamilyKind::InfCycleFamily:
          sub = fam.indexer().validate(window);
          break;
        case FamilyKind::InfCycle:
          sub = fam.enumeration().validate(window);
          break;
      }
      for (auto& c : sub.checks) {
        c.check = "family[" + std::to_string(t) + "]." + c.check;
        rep.add(std::move(c));
      }
    }
    if (fixed_set) {
      ValidationReport sub = fixed_set->validate(window);
      for (auto& c : sub.checks) {
        c.check = "fixed_set." + c.check;
        rep.add(std::move(c));
      }
    }

    // No point of the window may be claimed by two families, or by a family
    // and the fixed set; with a fixed set declared, the families and the
    // fixed set must moreover partition the whole window.
    CheckResult dis;
    dis.check = "orbits_disjoint_on_window";
    dis.evidence = Evidence::WindowChecked;
    CheckResult cov;
    cov.check = "window_partitioned_by_orbits_and_fixed_set";
    cov.evidence = Evidence::WindowChecked;
    for (Int x = -window; x <= window; ++x) {
      int claims = 0;
      for (const auto& fam : families)
        if (fam.contains(x)) ++claims;
      bool fixed_claim = fixed_set && fixed_set->locate(x).has_value();
      if (dis.ok && (claims > 1 || (claims > 0 && fixed_claim))) {
        dis.ok = false;
        dis.detail = "point " + std::to_string(x) + " claimed " +
                     std::to_string(claims) + " time(s) by orbits" +
                     (fixed_claim ? " and by the fixed set" : "");
      }
      if (cov.ok && fixed_set && claims == 0 && !fixed_claim) {
        cov.ok = false;
        cov.detail =
            "point " + std::to_string(x) + " covered by nothing";
      }
      if (!dis.ok && (!cov.ok || !fixed_set)) break;
    }
    rep.add(std::move(dis));
    if (fixed_set) rep.add(std::move(cov));
    return rep;
  }
};

//============================================================================
// Word: a composition of schemes, rightmost factor applied first.
//============================================================================

struct Word {
  std::vector<Scheme> factors;

  Int apply(Int x) const {
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      x = it->apply(x);
    return x;
  }
};

//============================================================================
// Window utilities
//============================================================================

// Dense image table on {-radius..radius}.
struct WindowTable {
  Int radius = 0;
  std::vector<Int> image;  // image[x + radius] = f(x)

  bool in(Int x) const { return x >= -radius && x <= radius; }
  Int operator()(Int x) const {
    if (!in(x)) fail(Errc::IndexOutOfDomain, "point outside window table");
    return image[static_cast<size_t>(x + radius)];
  }
};

inline WindowTable make_window_table(const Scheme& s, Int radius) {
  WindowTable t;
  t.radius = radius;
  t.image.reserve(static_cast<size_t>(2 * radius) + 1);
  for (Int x = -radius; x <= radius; ++x) t.image.push_back(s.apply(x));
  return t;
}

// Finite orbits fully visible in the table: follow image chains, keep the
// cycles of length >= 2 that close without leaving the window.
inline std::vector<std::vector<Int>> window_orbits(const WindowTable& t) {
  std::vector<std::vector<Int>> orbits;
  std::unordered_set<Int> visited;
  for (Int x = -t.radius; x <= t.radius; ++x) {
    if (visited.count(x)) continue;
    std::vector<Int> trail = {x};
    visited.insert(x);
    Int y = t(x);
    bool closed = (y == x);
    while (!closed && t.in(y) && !visited.count(y)) {
      trail.push_back(y);
      visited.insert(y);
      y = t(y);
      closed = (y == x);
    }
    if (closed && trail.size() >= 2) orbits.push_back(std::move(trail));
  }
  return orbits;
}

// Census of the complete finite orbits inside a window (finite sizes only).
inline std::map<Int, Int> window_census(const WindowTable& t) {
  std::map<Int, Int> counts;
  for (const auto& orbit : window_orbits(t))
    counts[static_cast<Int>(orbit.size())] += 1;
  return counts;
}

}  // namespace infperm
