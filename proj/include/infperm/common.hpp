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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace infperm {

// Point values are signed 64-bit; intermediates widen to 128-bit and every
// public result is clamped against a configurable magnitude cap so that all
// arithmetic visible through the API is exact.
using Int = std::int64_t;
using i128 = __int128;

//============================================================================
// Errors
//============================================================================

enum class Errc {
  IndexOutOfDomain,
  NotInvertible,  // reserved for wire compatibility; not raised by this impl
  Overflow,
  AmbiguousCoverage,
  NotRinged,
  NotInvolution,
  NotLocalFinite,
  WrongOrder,
  ComplementOpaque,
  InsufficientReservoir,
  ParseError,
  BadConstruction,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::IndexOutOfDomain:      return "IndexOutOfDomain";
    case Errc::NotInvertible:         return "NotInvertible";
    case Errc::Overflow:              return "Overflow";
    case Errc::AmbiguousCoverage:     return "AmbiguousCoverage";
    case Errc::NotRinged:             return "NotRinged";
    case Errc::NotInvolution:         return "NotInvolution";
    case Errc::NotLocalFinite:        return "NotLocalFinite";
    case Errc::WrongOrder:            return "WrongOrder";
    case Errc::ComplementOpaque:      return "ComplementOpaque";
    case Errc::InsufficientReservoir: return "InsufficientReservoir";
    case Errc::ParseError:            return "ParseError";
    case Errc::BadConstruction:       return "BadConstruction";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

//============================================================================
// Checked arithmetic
//============================================================================

// Default magnitude cap on every value produced or consumed: 2^62.
inline Int& value_cap() {
  static Int cap = Int{1} << 62;
  return cap;
}

inline Int check_value(i128 v, const char* ctx) {
  const i128 cap = value_cap();
  if (v > cap || v < -cap) fail(Errc::Overflow, std::string(ctx));
  return static_cast<Int>(v);
}

inline Int checked_add(Int a, Int b) {
  return check_value(i128(a) + i128(b), "addition exceeds value cap");
}
inline Int checked_mul(Int a, Int b) {
  return check_value(i128(a) * i128(b), "product exceeds value cap");
}
inline Int checked_neg(Int a) {
  return check_value(-i128(a), "negation exceeds value cap");
}

// a*x + b, exact.
inline Int checked_affine(Int a, Int b, Int x) {
  return check_value(i128(a) * i128(x) + i128(b),
                     "affine image exceeds value cap");
}

// Floor division/modulo with positive divisor (quotient rounded toward -inf).
inline Int floor_div(Int a, Int m) {
  Int q = a / m, r = a % m;
  if (r != 0 && ((r < 0) != (m < 0))) --q;
  return q;
}
inline Int floor_mod(Int a, Int m) { return a - floor_div(a, m) * m; }

// 2-adic valuation of a positive integer.
inline int dyadic_valuation(Int n) {
  int v = 0;
  while ((n & 1) == 0) { n >>= 1; ++v; }
  return v;
}

//============================================================================
// Evidence & validation reports
//============================================================================

// How a structural property (injectivity, disjointness, coverage) is known:
// by construction, or by exhaustive check on the validation window.
enum class Evidence { Proved, WindowChecked };

inline const char* evidence_name(Evidence e) {
  return e == Evidence::Proved ? "proved" : "window_checked";
}

struct CheckResult {
  std::string check;  // short machine-ish name of what was verified
  Evidence evidence = Evidence::Proved;
  bool ok = true;
  std::string detail;  // populated on failure (first witness)
};

struct ValidationReport {
  bool ok = true;
  std::vector<CheckResult> checks;

  void add(CheckResult r) {
    if (!r.ok) ok = false;
    checks.push_back(std::move(r));
  }
  void merge(const ValidationReport& other) {
    for (const auto& c : other.checks) add(c);
  }
  // Weakest evidence across all passing checks.
  Evidence overall_evidence() const {
    for (const auto& c : checks)
      if (c.evidence == Evidence::WindowChecked) return Evidence::WindowChecked;
    return Evidence::Proved;
  }
};

}  // namespace infperm
