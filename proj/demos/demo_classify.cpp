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

// Build a few permutations of the integers symbolically, then print their
// orbit censuses, structural classification, and class memberships.

#include <iostream>

#include "infperm/classes.hpp"
#include "infperm/json_io.hpp"
#include "infperm/scheme.hpp"

using namespace infperm;

namespace {

void show(const Scheme& s) {
  std::cout << "== " << (s.name ? *s.name : "(unnamed)") << " ==\n";
  std::cout << "  window:";
  for (Int x = -5; x <= 5; ++x) std::cout << " " << x << "->" << s.apply(x);
  std::cout << "\n  census: "
            << json_io::census_to_json(s.orbit_census()).dump() << "\n";
  StructuralReport r = classify_structural(s);
  std::cout << "  order=" << (r.order.finite ? std::to_string(r.order.n) : "w")
            << " ringed=" << r.is_ringed << " (" << r.ringed_evidence << ")"
            << " local_finite=" << r.is_local_finite << " wild=" << r.is_wild
            << "\n";
  for (const char* cls : {"S(w,2)", "W(w,w)", "K(1,w)", "R(w,2)", "S(w,6)"}) {
    ClassSpec spec = ClassSpec::parse(cls);
    std::cout << "  member " << cls << ": "
              << (class_member(s.orbit_census(), spec) ? "yes" : "no") << "\n";
  }
}

}  // namespace

int main() {
  // x -> x + 1: one orbit covering all of Z.
  Scheme succ;
  succ.name = "successor";
  succ.families.push_back(
      OrbitFamily::inf_cycle(Sequence::affine(1, 0, Domain::integers())));
  succ.fixed_set = Sequence::finite({});
  show(succ);

  // x -> -x - 1: the transpositions {k, -k-1} for every k >= 0.
  Scheme swap;
  swap.name = "mirror";
  swap.families.push_back(OrbitFamily::fin_cycle_family(
      2, Indexer2::rows(2, zig_nz())));
  swap.fixed_set = Sequence::finite({});
  show(swap);

  // A single 3-cycle (1 2 3); everything else fixed.
  Scheme tri;
  tri.name = "one-three-cycle";
  tri.families.push_back(OrbitFamily::fin_cycle({1, 2, 3}));
  tri.fixed_set = Sequence::splice(Sequence::affine(1, 4, Domain::nat()), {0},
                                   Sequence::affine(-1, -1, Domain::nat()));
  show(tri);
  return 0;
}
