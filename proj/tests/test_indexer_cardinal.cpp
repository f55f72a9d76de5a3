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

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "infperm/cardinal.hpp"
#include "infperm/indexer.hpp"

using namespace infperm;

TEST_CASE("rows indexer tiles the base into fixed-length rows") {
  Indexer2 ix = Indexer2::rows(3, Sequence::affine(2, 1, Domain::nat()));
  for (Int k = 0; k < 20; ++k)
    for (Int j = 0; j < 3; ++j) CHECK(ix.eval(k, j) == 2 * (3 * k + j) + 1);
  CHECK(ix.locate(2 * 14 + 1).value() == std::pair<Int, Int>{4, 2});
  CHECK_FALSE(ix.locate(4).has_value());  // even, not in the base
  CHECK_THROWS_AS(ix.eval(0, 3), Error);
  CHECK_THROWS_AS(ix.eval(-1, 0), Error);
  CHECK_THROWS_AS(Indexer2::rows(0, seq_identity_nat()), Error);
  CHECK_THROWS_AS(Indexer2::rows(2, seq_identity_int()), Error);
}

TEST_CASE("zig-zag fold and unfold are inverse") {
  for (Int i = -50; i <= 50; ++i) CHECK(zigzag_unfold(zigzag_fold(i)) == i);
  for (Int n = 0; n <= 100; ++n) CHECK(zigzag_fold(zigzag_unfold(n)) == n);
}

TEST_CASE("grid indexer partitions the base into bi-infinite rows") {
  Indexer2 ix = Indexer2::grid(seq_identity_nat());

  // Row k at position i reads base(2^k (2*fold(i) + 1) - 1).
  CHECK(ix.eval(0, 0) == 0);
  CHECK(ix.eval(1, 0) == 1);
  CHECK(ix.eval(2, 0) == 3);
  CHECK(ix.eval(0, 1) == 4);   // fold(1) = 2
  CHECK(ix.eval(0, -1) == 2);  // fold(-1) = 1

  // Distinct cells hit distinct arguments...
  std::set<Int> seen;
  for (Int k = 0; k <= 6; ++k)
    for (Int i = -20; i <= 20; ++i) {
      auto [it, fresh] = seen.insert(ix.eval(k, i));
      CHECK(fresh);
    }
  // ...and every argument belongs to exactly the cell that reproduces it.
  for (Int n = 0; n < 4096; ++n) {
    auto [k, i] = ix.cell_of_arg(n);
    CHECK(ix.arg(k, i) == n);
  }
  CHECK(ix.locate(4).value() == std::pair<Int, Int>{0, 1});
  CHECK_THROWS_AS(ix.arg(62, 0), Error);
  CHECK_THROWS_AS(Indexer2::grid(seq_identity_int()), Error);
}

TEST_CASE("cardinal arithmetic absorbs into the infinite value") {
  Cardinal two = Cardinal::fin(2), zero = Cardinal::fin(0);
  Cardinal w = Cardinal::inf();

  CHECK(two + Cardinal::fin(3) == Cardinal::fin(5));
  CHECK(two + w == w);
  CHECK(w + w == w);
  CHECK(two * Cardinal::fin(3) == Cardinal::fin(6));
  CHECK(two * w == w);
  CHECK(w * w == w);
  CHECK(zero * w == zero);  // annihilation beats absorption
  CHECK(w * zero == zero);

  CHECK(leq(two, w));
  CHECK_FALSE(leq(w, two));
  CHECK(leq(w, w));
  CHECK(leq(two, two));
  CHECK_FALSE(leq(Cardinal::fin(3), two));

  CHECK(lcm_cardinal(Cardinal::fin(4), Cardinal::fin(6)) == Cardinal::fin(12));
  CHECK(lcm_cardinal(two, w) == w);
  CHECK(lcm_cardinal(zero, two) == zero);

  CHECK(two.str() == "2");
  CHECK(w.str() == "w");
  CHECK_THROWS_AS(Cardinal::fin(-1), Error);
}

TEST_CASE("orbit censuses accumulate and summarize") {
  OrbitCensus c;
  CHECK(c.empty());
  c.add_finite(2, Cardinal::fin(3));
  c.add_finite(2, Cardinal::fin(1));  // merges with the previous entry
  c.add_finite(5, Cardinal::inf());
  c.add_finite(7, Cardinal::fin(0));  // zero counts are dropped
  CHECK(c.finite.size() == 2);
  CHECK(c.finite.at(2) == Cardinal::fin(4));
  CHECK(c.finite.at(5) == Cardinal::inf());
  CHECK(c.support_cardinality() == Cardinal::inf());
  CHECK(c.orbit_count() == Cardinal::inf());

  OrbitCensus small;
  small.add_finite(3, Cardinal::fin(2));
  CHECK(small.support_cardinality() == Cardinal::fin(6));
  CHECK(small.orbit_count() == Cardinal::fin(2));

  OrbitCensus inf_orbits;
  inf_orbits.add_infinite(Cardinal::fin(2));
  CHECK(inf_orbits.support_cardinality() == Cardinal::inf());
  CHECK(inf_orbits.orbit_count() == Cardinal::fin(2));

  CHECK_THROWS_AS(c.add_finite(1, Cardinal::fin(1)), Error);
  CHECK(small == small);
  CHECK_FALSE(small == c);
}
