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

// Factor x -> x+1 step by step: first into two locally finite involutions,
// then all the way into wild factors, machine-checking every step on a
// window.

#include <iostream>

#include "infperm/factor.hpp"
#include "infperm/json_io.hpp"

using namespace infperm;

namespace {

void report(const char* label, const FactorizationResult& res) {
  std::cout << label << ": " << res.word.factors.size() << " factor(s), "
            << res.verification.mismatches << " mismatch(es) on windows";
  for (Int w : res.verification.windows) std::cout << " " << w;
  std::cout << ", certificates";
  for (const auto& c : res.certificates)
    std::cout << " " << c.kind << (c.pass ? "+" : "-");
  std::cout << "\n";
}

}  // namespace

int main() {
  Scheme succ;
  succ.name = "successor";
  succ.families.push_back(
      OrbitFamily::inf_cycle(Sequence::affine(1, 0, Domain::integers())));
  succ.fixed_set = Sequence::finite({});

  FactorOptions opts;
  opts.windows = {64, 256};

  FactorizationResult lf = factor_ringed_to_lf(succ, opts);
  report("successor -> locally finite", lf);
  // Rightmost factor is applied first: factors[1] pairs 5 with -6, then
  // factors[0] carries -6 to 6 = succ(5).
  std::cout << "  f1(5) = " << lf.word.factors[1].apply(5)
            << ", f2(-6) = " << lf.word.factors[0].apply(-6) << "\n";

  FactorizationResult wild = chain_factor(succ, FactorTarget::Wild, opts);
  report("successor => wild (chain)", wild);

  std::cout << "  first wild factor:\n    "
            << json_io::scheme_to_json(wild.word.factors[0]).dump() << "\n";
  return 0;
}
