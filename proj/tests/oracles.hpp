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

// Independent reference implementations used only by the tests. They are
// deliberately brute force: membership by enumerating every set partition
// of the orbits, location by linear scan. The library must agree with them.

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "infperm/cardinal.hpp"
#include "infperm/seq.hpp"

namespace oracles {

using infperm::Int;

// All ways to split `sizes` (one entry per orbit) into nonempty groups,
// reported as the sorted vector of group sums. Deduplicated. Bell(8) = 4140,
// so this stays tiny for the census sizes the tests use. The empty census
// has exactly one partition: the empty one.
inline std::vector<std::vector<Int>> partition_profiles(
    const std::vector<Int>& sizes) {
  std::set<std::vector<Int>> seen;
  std::vector<Int> groups;  // current partial partition, as group sums
  std::function<void(size_t)> place = [&](size_t i) {
    if (i == sizes.size()) {
      std::vector<Int> profile = groups;
      std::sort(profile.begin(), profile.end());
      seen.insert(std::move(profile));
      return;
    }
    // Join an existing group. Index, not iterate: the recursive call grows
    // and shrinks `groups`, which would invalidate references into it.
    for (size_t gi = 0; gi < groups.size(); ++gi) {
      groups[gi] += sizes[i];
      place(i + 1);
      groups[gi] -= sizes[i];
    }
    groups.push_back(sizes[i]);  // open a new group
    place(i + 1);
    groups.pop_back();
  };
  place(0);
  return {seen.begin(), seen.end()};
}

// Reference class membership for finite data: does some partition of the
// orbits into invariant parts meet the part-count and part-size conditions?
inline bool member_by_partitions(const std::vector<std::vector<Int>>& profiles,
                                 bool parts_exact, bool size_exact, Int alpha,
                                 Int beta) {
  for (const auto& p : profiles) {
    Int parts = static_cast<Int>(p.size());
    if (parts_exact ? parts != alpha : parts > alpha) continue;
    bool sizes_ok = true;
    for (Int s : p)
      if (size_exact ? s != beta : s > beta) {
        sizes_ok = false;
        break;
      }
    if (sizes_ok) return true;
  }
  return false;
}

// Reference locate: scan the index window for a preimage of `value`.
inline std::optional<Int> locate_by_scan(const infperm::Sequence& s, Int value,
                                         Int window) {
  for (Int i : infperm::window_indices(s.domain(), window))
    if (s.eval(i) == value) return i;
  return std::nullopt;
}

// Random census over sizes 2..9 with finite or infinite counts, possibly
// with infinite orbits. Drives the randomized lattice/monotonicity tests.
template <typename Rng>
infperm::OrbitCensus random_census(Rng& rng) {
  using infperm::Cardinal;
  std::uniform_int_distribution<Int> nsizes(0, 4), size(2, 9), count(1, 5),
      coin(0, 9);
  infperm::OrbitCensus c;
  Int k = nsizes(rng);
  for (Int t = 0; t < k; ++t) {
    Cardinal cnt =
        coin(rng) < 3 ? Cardinal::inf() : Cardinal::fin(count(rng));
    c.add_finite(size(rng), cnt);
  }
  Int infinite = coin(rng);
  if (infinite < 2)
    c.add_infinite(Cardinal::fin(count(rng)));
  else if (infinite < 4)
    c.add_infinite(Cardinal::inf());
  return c;
}

// Random cardinal: Fin(0..6) or the infinite value.
template <typename Rng>
infperm::Cardinal random_cardinal(Rng& rng) {
  std::uniform_int_distribution<Int> pick(0, 8);
  Int v = pick(rng);
  return v > 6 ? infperm::Cardinal::inf() : infperm::Cardinal::fin(v);
}

}  // namespace oracles
