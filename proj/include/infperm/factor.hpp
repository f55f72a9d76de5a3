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
#include <utility>
#include <vector>

#include "infperm/classes.hpp"
#include "infperm/scheme.hpp"
#include "infperm/seq.hpp"

namespace infperm {

//============================================================================
// Targets, options, results
//============================================================================

enum class FactorTarget { Ringed, LocalFinite, Wild, SOmegaN };

inline std::string target_token(FactorTarget t, Int n = 0) {
  switch (t) {
    case FactorTarget::Ringed: return "ringed";
    case FactorTarget::LocalFinite: return "lf";
    case FactorTarget::Wild: return "wild";
    case FactorTarget::SOmegaN: return "s-omega-" + std::to_string(n);
  }
  return "?";
}

// Parses "lf" | "ringed" | "wild" | "s-omega-<n>" (n >= 2).
inline std::pair<FactorTarget, Int> parse_target(const std::string& text) {
  if (text == "lf") return {FactorTarget::LocalFinite, 0};
  if (text == "ringed") return {FactorTarget::Ringed, 0};
  if (text == "wild") return {FactorTarget::Wild, 0};
  const std::string prefix = "s-omega-";
  if (text.rfind(prefix, 0) == 0) {
    const std::string digits = text.substr(prefix.size());
    if (!digits.empty() &&
        digits.find_first_not_of("0123456789") == std::string::npos) {
      Int n = 0;
      for (char c : digits) n = n * 10 + (c - '0');
      if (n >= 2) return {FactorTarget::SOmegaN, n};
    }
  }
  fail(Errc::ParseError,
       "unknown target '" + text + "' (expected lf|ringed|wild|s-omega-N)");
}

struct FactorOptions {
  std::vector<Int> windows{64, 256, 1024};
  Int max_examples = 5;
  bool preflight = true;  // validate the input scheme before constructing
};

struct FactorCertificate {
  std::string kind;  // "structural" | "census" | "identity"
  bool pass = false;
  std::optional<StructuralReport> report;  // when kind == structural
  std::optional<OrbitCensus> census;       // when kind == census
  std::string detail;
};

struct VerificationReport {
  struct Example {
    Int x = 0, want = 0, got = 0;
  };
  std::vector<Int> windows;
  Int mismatches = 0;
  std::vector<Example> examples;
};

struct FactorizationResult {
  Scheme input;
  Word word;
  FactorTarget target = FactorTarget::LocalFinite;
  Int order_n = 0;  // meaningful for SOmegaN
  std::vector<FactorCertificate> certificates;
  VerificationReport verification;

  std::string target_name() const { return target_token(target, order_n); }
  bool all_certified() const {
    for (const auto& c : certificates)
      if (!c.pass) return false;
    return true;
  }
};

//============================================================================
// Shared construction helpers
//============================================================================

namespace detail {

// The fixed-set enumerator rebased over the naturals.
inline Sequence fix_over_nat(const Sequence& fix) {
  if (fix.domain().kind == Domain::Kind::Int)
    return Sequence::reindex(fix, zig_nz());
  return fix;
}

// All values of a finite-domain sequence, in index order.
inline std::vector<Int> evaluate_finite(const Sequence& s) {
  if (s.domain().kind != Domain::Kind::Fin)
    fail(Errc::BadConstruction, "expected a finite-domain sequence");
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(s.domain().size));
  for (Int i = 0; i < s.domain().size; ++i) out.push_back(s.eval(i));
  return out;
}

// Slot order walking one cycle of a length-L row family in image order:
// starting element first, each next slot the image of the previous.
inline std::vector<Int> cycle_slots(Int length, bool reversed) {
  std::vector<Int> slots;
  slots.reserve(static_cast<size_t>(length));
  if (!reversed) {
    for (Int j = 0; j < length; ++j) slots.push_back(j);
  } else {
    for (Int j = length - 1; j >= 0; --j) slots.push_back(j);
  }
  return slots;
}

// Enumerates the moved points of the given families over the naturals
// (explicit cycles first, then the families interleaved). Returns a
// finite-domain list when there are no infinite families.
inline Sequence support_enumeration(const std::vector<OrbitFamily>& families) {
  std::vector<Int> flat;
  std::vector<Sequence> parts;
  for (const auto& fam : families) {
    switch (fam.kind()) {
      case FamilyKind::FinCycle:
        for (Int v : fam.cycle()) flat.push_back(v);
        break;
      case FamilyKind::FinCycleFamily:
        parts.push_back(fam.indexer().base());
        break;
      case FamilyKind::InfCycle:
        parts.push_back(Sequence::reindex(fam.enumeration(), zig_nz()));
        break;
      case FamilyKind::InfCycleFamily:
        parts.push_back(fam.indexer().base());
        break;
    }
  }
  if (parts.empty()) return Sequence::finite(flat);
  Sequence tail =
      parts.size() == 1 ? parts.front() : Sequence::interleave(parts);
  return nat_concat(flat, tail);
}

// Joins an enumeration (possibly finite) in front of an infinite one over
// the naturals.
inline Sequence combine_enumerations(const Sequence& head,
                                     const Sequence& tail) {
  if (head.domain().kind == Domain::Kind::Fin)
    return nat_concat(evaluate_finite(head), tail);
  return Sequence::interleave({head, tail});
}

inline void preflight_scheme(const Scheme& s) {
  auto report = s.validate(64);
  if (!report.ok) {
    std::string which = "validation failed";
    for (const auto& c : report.checks)
      if (!c.ok) {
        which = c.check + (c.detail.empty() ? "" : ": " + c.detail);
        break;
      }
    fail(Errc::AmbiguousCoverage, "input scheme rejected: " + which);
  }
}

//----------------------------------------------------------------------------
// Certification and window verification
//----------------------------------------------------------------------------

inline FactorCertificate certify_factor(const Scheme& factor,
                                        FactorTarget target, Int n) {
  FactorCertificate cert;
  if (factor.families.empty()) {
    cert.kind = "identity";
    cert.pass = true;
    cert.detail = "identity factor is admissible for every target";
    return cert;
  }
  if (target == FactorTarget::SOmegaN) {
    cert.kind = "census";
    OrbitCensus census = factor.orbit_census();
    cert.pass = class_member(census, ClassSpec::S(Cardinal::inf(),
                                                  Cardinal::fin(n)));
    cert.census = std::move(census);
    cert.detail = "census membership in S(w," + std::to_string(n) + ")";
    return cert;
  }
  cert.kind = "structural";
  StructuralReport rep = classify_structural(factor);
  switch (target) {
    case FactorTarget::Ringed:
      cert.pass = rep.is_ringed;
      cert.detail = "ringed: " + rep.ringed_evidence;
      break;
    case FactorTarget::LocalFinite:
      cert.pass = rep.is_local_finite;
      cert.detail = "locally finite";
      break;
    case FactorTarget::Wild:
      cert.pass = rep.is_wild;
      cert.detail = "wild";
      break;
    default:
      break;
  }
  cert.report = std::move(rep);
  return cert;
}

inline VerificationReport verify_word(const Scheme& input, const Word& word,
                                      const FactorOptions& opts) {
  VerificationReport rep;
  rep.windows = opts.windows;
  for (Int n : opts.windows) {
    for (Int x = -n; x <= n; ++x) {
      Int want = input.apply(x);
      Int got = word.apply(x);
      if (want != got) {
        ++rep.mismatches;
        if (static_cast<Int>(rep.examples.size()) < opts.max_examples)
          rep.examples.push_back({x, want, got});
      }
    }
  }
  return rep;
}

inline FactorizationResult finish_result(Scheme input, Word word,
                                         FactorTarget target, Int n,
                                         const FactorOptions& opts) {
  FactorizationResult res;
  res.input = std::move(input);
  res.word = std::move(word);
  res.target = target;
  res.order_n = n;
  for (const auto& factor : res.word.factors)
    res.certificates.push_back(certify_factor(factor, target, n));
  res.verification = verify_word(res.input, res.word, opts);
  return res;
}

//----------------------------------------------------------------------------
// Absorption core shared by the locally-finite -> wild cases.
//
// Given the non-trivial cycles of a locally finite permutation and an
// infinite reservoir enumeration (disjoint from the cycles), produce the
// pair (A, B) with A∘B equal to the cycles' permutation and both factors
// carrying an infinite-cycle family:
//   A threads every cycle consecutively onto one bi-infinite chain fed by
//   half the reservoir, plus a grid family on the other half;
//   B shifts the chain's finishing elements back and reverses the grid.
//----------------------------------------------------------------------------

struct AbsorbInput {
  std::vector<OrbitFamily> explicit_cycles;  // FinCycle only
  std::vector<OrbitFamily> cycle_families;   // FinCycleFamily only
  Sequence pool = seq_identity_nat();        // infinite, over naturals
  std::vector<Int> a_fix;        // complement of A's support, flat
  std::vector<Int> b_fix_prefix; // finite head of B's complement
};

inline std::pair<Scheme, Scheme> absorb_cycles(const AbsorbInput& in) {
  std::vector<Int> flat, finals, nonfinals;
  for (const auto& cyc : in.explicit_cycles) {
    const auto& e = cyc.cycle();
    for (Int v : e) flat.push_back(v);
    finals.push_back(e.back());
    for (size_t i = 0; i + 1 < e.size(); ++i) nonfinals.push_back(e[i]);
  }

  Scheme a, b;
  if (!in.cycle_families.empty()) {
    // One shared chain: reservoir evens behind, all cycles ahead.
    Sequence chain_in = Sequence::dyadic_row(in.pool, 0);  // pool(2j)
    Sequence grid_part =
        Sequence::reindex(in.pool, Sequence::affine(2, 1, Domain::nat()));

    std::vector<Sequence> body_parts, final_parts, nonfinal_parts;
    for (const auto& fam : in.cycle_families) {
      const Sequence& base = fam.indexer().base();
      const Int len = fam.cycle_length().n;
      auto slots = cycle_slots(len, fam.reversed());
      for (Int slot : slots)
        body_parts.push_back(Sequence::reindex(
            base, Sequence::affine(len, slot, Domain::nat())));
      final_parts.push_back(Sequence::reindex(
          base, Sequence::affine(len, slots.back(), Domain::nat())));
      for (size_t p = 0; p + 1 < slots.size(); ++p)
        nonfinal_parts.push_back(Sequence::reindex(
            base, Sequence::affine(len, slots[p], Domain::nat())));
    }
    Sequence body = body_parts.size() == 1 ? body_parts.front()
                                           : Sequence::interleave(body_parts);
    Sequence chain_out = nat_concat(flat, body);
    Sequence final_tail = final_parts.size() == 1
                              ? final_parts.front()
                              : Sequence::interleave(final_parts);
    Sequence final_seq = nat_concat(finals, final_tail);

    a.families.push_back(OrbitFamily::inf_cycle(
        Sequence::splice(chain_in, {}, chain_out)));
    a.families.push_back(
        OrbitFamily::inf_cycle_family(Indexer2::grid(grid_part), false));
    b.families.push_back(OrbitFamily::inf_cycle(
        Sequence::splice(final_seq, {}, chain_in)));
    b.families.push_back(
        OrbitFamily::inf_cycle_family(Indexer2::grid(grid_part), true));

    std::vector<Int> b_prefix = in.b_fix_prefix;
    for (Int v : nonfinals) b_prefix.push_back(v);
    Sequence nonfinal_tail = nonfinal_parts.size() == 1
                                 ? nonfinal_parts.front()
                                 : Sequence::interleave(nonfinal_parts);
    b.fixed_set = nat_concat(b_prefix, nonfinal_tail);
  } else {
    // Finitely many cycles: feed them between two reservoir rows and pad
    // both factors with a mutually cancelling grid family.
    if (in.explicit_cycles.empty())
      fail(Errc::BadConstruction, "absorption needs at least one cycle");
    Sequence row0 = Sequence::dyadic_row(in.pool, 0);  // pool(2j)
    Sequence row1 = Sequence::dyadic_row(in.pool, 1);  // pool(4j+1)
    Sequence grid_part =
        Sequence::reindex(in.pool, Sequence::affine(4, 3, Domain::nat()));

    std::vector<Int> finals_desc(finals.rbegin(), finals.rend());
    a.families.push_back(
        OrbitFamily::inf_cycle(Sequence::splice(row0, flat, row1)));
    a.families.push_back(
        OrbitFamily::inf_cycle_family(Indexer2::grid(grid_part), false));
    b.families.push_back(
        OrbitFamily::inf_cycle(Sequence::splice(row1, finals_desc, row0)));
    b.families.push_back(
        OrbitFamily::inf_cycle_family(Indexer2::grid(grid_part), true));

    std::vector<Int> b_prefix = in.b_fix_prefix;
    for (Int v : nonfinals) b_prefix.push_back(v);
    b.fixed_set = Sequence::finite(b_prefix);
  }
  a.fixed_set = Sequence::finite(in.a_fix);
  return {std::move(a), std::move(b)};
}

// Splits every length-L row family into its even-indexed and odd-indexed
// cycles, as two families over reindexed bases.
inline std::pair<OrbitFamily, OrbitFamily> split_family_by_cycle_parity(
    const OrbitFamily& fam) {
  const Sequence& base = fam.indexer().base();
  const Int len = fam.cycle_length().n;
  std::vector<Sequence> even_parts, odd_parts;
  for (Int j = 0; j < len; ++j) {
    even_parts.push_back(Sequence::affine(2 * len, j, Domain::nat()));
    odd_parts.push_back(Sequence::affine(2 * len, len + j, Domain::nat()));
  }
  Sequence even_base = Sequence::reindex(
      base, even_parts.size() == 1 ? even_parts.front()
                                   : Sequence::interleave(even_parts));
  Sequence odd_base = Sequence::reindex(
      base, odd_parts.size() == 1 ? odd_parts.front()
                                  : Sequence::interleave(odd_parts));
  return {OrbitFamily::fin_cycle_family(len, Indexer2::rows(len, even_base),
                                        fam.reversed()),
          OrbitFamily::fin_cycle_family(len, Indexer2::rows(len, odd_base),
                                        fam.reversed())};
}

}  // namespace detail

//============================================================================
// factor_ringed_to_lf: a ringed permutation as exactly two locally finite
// factors. Each bi-infinite cycle e splits into the pairing k <-> -k-1
// (factor one) and k+1 <-> -k-1 (factor two); explicit finite cycles ride
// along in factor two.
//============================================================================

inline FactorizationResult factor_ringed_to_lf(const Scheme& f,
                                               const FactorOptions& opts = {}) {
  if (opts.preflight) detail::preflight_scheme(f);
  if (f.families.empty())
    return detail::finish_result(f, Word{{f}}, FactorTarget::LocalFinite, 0,
                                 opts);
  StructuralReport rep = classify_structural(f);
  if (!rep.is_ringed) {
    if (rep.ringed_evidence == "complement_opaque")
      fail(Errc::ComplementOpaque,
           "ringed factorization needs the fixed-set enumerator");
    fail(Errc::NotRinged, "input is not ringed: " + rep.ringed_evidence);
  }

  std::vector<Int> fix_flat = detail::evaluate_finite(*f.fixed_set);
  Scheme f1, f2;
  std::vector<Int> f1_fix = fix_flat;
  std::vector<Int> f2_fix = fix_flat;
  for (const auto& fam : f.families) {
    if (fam.kind() == FamilyKind::FinCycle) {
      f2.families.push_back(fam);
      for (Int v : fam.cycle()) f1_fix.push_back(v);
      continue;
    }
    const Sequence& e = fam.enumeration();
    Sequence fold1 = Sequence::interleave(
        {Sequence::affine(1, 0, Domain::nat()),
         Sequence::affine(-1, -1, Domain::nat())});  // k, -k-1
    Sequence fold2 = Sequence::interleave(
        {Sequence::affine(1, 1, Domain::nat()),
         Sequence::affine(-1, -1, Domain::nat())});  // k+1, -k-1
    f1.families.push_back(OrbitFamily::fin_cycle_family(
        2, Indexer2::rows(2, Sequence::reindex(e, fold1)), false));
    f2.families.push_back(OrbitFamily::fin_cycle_family(
        2, Indexer2::rows(2, Sequence::reindex(e, fold2)), false));
    f2_fix.push_back(e.eval(0));
  }
  f1.fixed_set = Sequence::finite(f1_fix);
  f2.fixed_set = Sequence::finite(f2_fix);
  // Rightmost factor applies first.
  return detail::finish_result(f, Word{{std::move(f2), std::move(f1)}},
                               FactorTarget::LocalFinite, 0, opts);
}

//============================================================================
// factor_involution_to_ringed: an involution as at most four ringed factors.
// Infinitely many transpositions: two bi-infinite cycles threading the
// pairs; an infinite fixed set is absorbed as a forward cycle in one factor
// and its reverse in the other. Finitely many transpositions: route through
// an auxiliary involution over the fixed set.
//============================================================================

namespace detail {

// The two chain enumerations for a pair sequence X (X(2t) <-> X(2t+1)).
inline std::pair<Sequence, Sequence> involution_chains(const Sequence& X) {
  auto off = [&](Int a, Int b) {
    return Sequence::reindex(X, Sequence::affine(a, b, Domain::nat()));
  };
  Sequence e2 = Sequence::splice(
      Sequence::interleave({off(4, 3), off(4, 1)}), {}, off(2, 0));
  Sequence e1 = Sequence::splice(
      Sequence::interleave({off(4, 3), off(4, 4)}), {X.eval(0)},
      Sequence::interleave({off(4, 2), off(4, 1)}));
  return {std::move(e1), std::move(e2)};
}

// Infinite-transpositions case: X pairs the support, fix describes the
// complement (finite list stays fixed; infinite enumerations are absorbed).
inline std::pair<Scheme, Scheme> involution_rings(
    const Sequence& X, const std::optional<Sequence>& fix) {
  auto [e1, e2] = involution_chains(X);
  Scheme g1, g2;
  g1.families.push_back(OrbitFamily::inf_cycle(e1));
  g2.families.push_back(OrbitFamily::inf_cycle(e2));
  if (fix && fix->domain().kind != Domain::Kind::Fin) {
    Sequence fz = seq_on_int_domain(fix_over_nat(*fix));
    g1.families.push_back(OrbitFamily::inf_cycle(fz));
    g2.families.push_back(OrbitFamily::inf_cycle(seq_reverse_int(fz)));
    g1.fixed_set = Sequence::finite({});
    g2.fixed_set = Sequence::finite({});
  } else if (fix) {
    g1.fixed_set = *fix;
    g2.fixed_set = *fix;
  }
  return {std::move(g1), std::move(g2)};
}

// Pair enumeration for a mix of explicit transpositions and length-2 row
// families: partners sit at (X(2t), X(2t+1)).
inline Sequence involution_pair_sequence(
    const std::vector<OrbitFamily>& explicit_pairs,
    const std::vector<OrbitFamily>& pair_families) {
  std::vector<Int> flat;
  for (const auto& p : explicit_pairs)
    for (Int v : p.cycle()) flat.push_back(v);
  if (pair_families.empty()) return Sequence::finite(flat);
  Sequence tail = pair_families.front().indexer().base();
  if (pair_families.size() > 1) {
    std::vector<Sequence> parts;
    for (const auto& fam : pair_families) {
      const Sequence& b = fam.indexer().base();
      parts.push_back(
          Sequence::reindex(b, Sequence::affine(2, 0, Domain::nat())));
      parts.push_back(
          Sequence::reindex(b, Sequence::affine(2, 1, Domain::nat())));
    }
    tail = Sequence::interleave(parts);
  }
  return nat_concat(flat, tail);
}

}  // namespace detail

inline FactorizationResult factor_involution_to_ringed(
    const Scheme& f, const FactorOptions& opts = {}) {
  if (opts.preflight) detail::preflight_scheme(f);
  if (f.families.empty())
    return detail::finish_result(f, Word{{f}}, FactorTarget::Ringed, 0, opts);
  StructuralReport rep = classify_structural(f);
  if (!rep.in_I_n || *rep.in_I_n != 2)
    fail(Errc::NotInvolution, "input order is not exactly 2");
  if (!f.fixed_set)
    fail(Errc::ComplementOpaque,
         "involution factorization needs the fixed-set enumerator");

  std::vector<OrbitFamily> pairs, families;
  for (const auto& fam : f.families) {
    if (fam.kind() == FamilyKind::FinCycle)
      pairs.push_back(fam);
    else
      families.push_back(fam);
  }

  if (!families.empty()) {
    Sequence X = detail::involution_pair_sequence(pairs, families);
    auto [g1, g2] = detail::involution_rings(X, f.fixed_set);
    return detail::finish_result(f, Word{{std::move(g1), std::move(g2)}},
                                 FactorTarget::Ringed, 0, opts);
  }

  // Finitely many transpositions: pair up the (necessarily infinite) fixed
  // set as an auxiliary involution h, take h' = h minus f's pairs, and
  // factor both through the infinite case; f = h ∘ h'.
  if (f.fixed_set->domain().kind == Domain::Kind::Fin)
    fail(Errc::InsufficientReservoir,
         "finite transpositions with a finite fixed set leave no room to "
         "build the auxiliary involution");
  Sequence phi = detail::fix_over_nat(*f.fixed_set);
  OrbitFamily reservoir_pairs =
      OrbitFamily::fin_cycle_family(2, Indexer2::rows(2, phi), false);

  Sequence Xh = detail::involution_pair_sequence(pairs, {reservoir_pairs});
  auto [h1, h2] = detail::involution_rings(Xh, Sequence::finite({}));

  std::vector<Int> support_flat;
  for (const auto& p : pairs)
    for (Int v : p.cycle()) support_flat.push_back(v);
  Sequence Xh2 = detail::involution_pair_sequence({}, {reservoir_pairs});
  auto [h1p, h2p] =
      detail::involution_rings(Xh2, Sequence::finite(support_flat));

  return detail::finish_result(
      f,
      Word{{std::move(h1), std::move(h2), std::move(h1p), std::move(h2p)}},
      FactorTarget::Ringed, 0, opts);
}

//============================================================================
// factor_lf_to_wild: a locally finite permutation as two wild factors when
// the fixed set is infinite (reservoir absorbed from it), four when it is
// finite (each cycle-parity half absorbed against the other half's support).
//============================================================================

inline FactorizationResult factor_lf_to_wild(const Scheme& f,
                                             const FactorOptions& opts = {}) {
  if (opts.preflight) detail::preflight_scheme(f);
  if (f.families.empty())
    return detail::finish_result(f, Word{{f}}, FactorTarget::Wild, 0, opts);
  StructuralReport rep = classify_structural(f);
  if (!rep.is_local_finite)
    fail(Errc::NotLocalFinite, "input has infinite orbits");
  if (!f.fixed_set)
    fail(Errc::ComplementOpaque,
         "wild factorization needs the fixed-set enumerator");

  std::vector<OrbitFamily> explicit_cycles, cycle_families;
  for (const auto& fam : f.families) {
    if (fam.kind() == FamilyKind::FinCycle)
      explicit_cycles.push_back(fam);
    else
      cycle_families.push_back(fam);
  }

  const bool fix_infinite = f.fixed_set->domain().kind != Domain::Kind::Fin;
  if (fix_infinite) {
    detail::AbsorbInput in;
    in.explicit_cycles = explicit_cycles;
    in.cycle_families = cycle_families;
    in.pool = detail::fix_over_nat(*f.fixed_set);
    auto [a, b] = detail::absorb_cycles(in);
    return detail::finish_result(f, Word{{std::move(a), std::move(b)}},
                                 FactorTarget::Wild, 0, opts);
  }

  // Finite fixed set: the reservoir must come from the support itself, so
  // each half of the cycles borrows the other half as its reservoir.
  if (cycle_families.empty())
    fail(Errc::InsufficientReservoir,
         "finitely many cycles and a finite fixed set leave no infinite "
         "reservoir");
  std::vector<Int> fix_flat = detail::evaluate_finite(*f.fixed_set);

  std::vector<OrbitFamily> even_half, odd_half;
  for (const auto& fam : cycle_families) {
    auto [even_fam, odd_fam] = detail::split_family_by_cycle_parity(fam);
    even_half.push_back(std::move(even_fam));
    odd_half.push_back(std::move(odd_fam));
  }

  // Odd half (plus the explicit cycles) is eliminated first, drawing its
  // reservoir from the even half's support, then vice versa.
  detail::AbsorbInput odd_in;
  odd_in.explicit_cycles = explicit_cycles;
  odd_in.cycle_families = odd_half;
  odd_in.pool = detail::support_enumeration(even_half);
  odd_in.a_fix = fix_flat;
  odd_in.b_fix_prefix = fix_flat;
  auto [a_odd, b_odd] = detail::absorb_cycles(odd_in);

  std::vector<OrbitFamily> odd_and_explicit = explicit_cycles;
  for (const auto& fam : odd_half) odd_and_explicit.push_back(fam);
  detail::AbsorbInput even_in;
  even_in.cycle_families = even_half;
  even_in.pool = detail::support_enumeration(odd_and_explicit);
  even_in.a_fix = fix_flat;
  even_in.b_fix_prefix = fix_flat;
  auto [a_even, b_even] = detail::absorb_cycles(even_in);

  return detail::finish_result(
      f,
      Word{{std::move(a_even), std::move(b_even), std::move(a_odd),
            std::move(b_odd)}},
      FactorTarget::Wild, 0, opts);
}

//============================================================================
// factor_order_n: an order-n permutation as at most three factors whose
// censuses pack into exact-n invariant blocks. When the input census
// already packs, the word is [f]; otherwise every orbit size with finitely
// many orbits is promoted to infinitely many by a fresh cycle family on a
// reservoir row, and the second factor cancels the fresh families.
//============================================================================

inline FactorizationResult factor_order_n(const Scheme& f, Int n,
                                          const FactorOptions& opts = {}) {
  if (n < 2) fail(Errc::BadConstruction, "order target must be at least 2");
  if (opts.preflight) detail::preflight_scheme(f);
  if (f.families.empty())
    return detail::finish_result(f, Word{{f}}, FactorTarget::SOmegaN, n, opts);
  StructuralReport rep = classify_structural(f);
  if (!rep.in_I_n || *rep.in_I_n != n)
    fail(Errc::WrongOrder,
         "input order is " + rep.order.str() + ", not " + std::to_string(n));

  const ClassSpec target = ClassSpec::S(Cardinal::inf(), Cardinal::fin(n));
  OrbitCensus census = f.orbit_census();
  if (class_member(census, target))
    return detail::finish_result(f, Word{{f}}, FactorTarget::SOmegaN, n, opts);

  if (!f.fixed_set)
    fail(Errc::ComplementOpaque,
         "order-n factorization needs the fixed-set enumerator");
  if (f.fixed_set->domain().kind == Domain::Kind::Fin)
    fail(Errc::InsufficientReservoir,
         "census fails exact-n packing and the fixed set is finite");

  Sequence phi = detail::fix_over_nat(*f.fixed_set);
  std::vector<Int> promoted_sizes;
  for (const auto& [size, count] : census.finite)
    if (count.finite) promoted_sizes.push_back(size);

  std::vector<OrbitFamily> fresh, fresh_reversed;
  for (size_t j = 0; j < promoted_sizes.size(); ++j) {
    Int d = promoted_sizes[j];
    Sequence row = Sequence::dyadic_row(phi, static_cast<int>(j));
    fresh.push_back(
        OrbitFamily::fin_cycle_family(d, Indexer2::rows(d, row), false));
    fresh_reversed.push_back(
        OrbitFamily::fin_cycle_family(d, Indexer2::rows(d, row), true));
  }
  const Int rows_used = static_cast<Int>(promoted_sizes.size());
  const Int stride = Int(1) << rows_used;
  Sequence leftover = Sequence::reindex(
      phi, Sequence::affine(stride, stride - 1, Domain::nat()));

  Scheme g1 = f;
  g1.name.reset();
  for (const auto& fam : fresh) g1.families.push_back(fam);
  g1.fixed_set = leftover;

  Scheme g2;
  g2.families = fresh_reversed;
  g2.fixed_set = detail::combine_enumerations(
      detail::support_enumeration(f.families), leftover);

  return detail::finish_result(f, Word{{std::move(g1), std::move(g2)}},
                               FactorTarget::SOmegaN, n, opts);
}

//============================================================================
// chain_factor: route to the target class along the factorization chain,
// re-factoring intermediate factors as needed. Routing starts from the most
// advanced class the input already satisfies.
//============================================================================

inline FactorizationResult chain_factor(const Scheme& f, FactorTarget target,
                                        const FactorOptions& opts = {},
                                        Int n = 0) {
  if (opts.preflight) detail::preflight_scheme(f);
  FactorOptions sub = opts;
  sub.preflight = false;

  if (f.families.empty())
    return detail::finish_result(f, Word{{f}}, target, n, opts);
  StructuralReport rep = classify_structural(f);

  switch (target) {
    case FactorTarget::Ringed: {
      if (rep.is_ringed)
        return detail::finish_result(f, Word{{f}}, target, 0, opts);
      if (rep.in_I_n && *rep.in_I_n == 2) {
        auto res = factor_involution_to_ringed(f, sub);
        return detail::finish_result(f, res.word, target, 0, opts);
      }
      fail(Errc::NotInvolution,
           "no chain edge reaches ringed from this input");
    }
    case FactorTarget::LocalFinite: {
      if (rep.is_local_finite)
        return detail::finish_result(f, Word{{f}}, target, 0, opts);
      if (rep.is_ringed) {
        auto res = factor_ringed_to_lf(f, sub);
        return detail::finish_result(f, res.word, target, 0, opts);
      }
      fail(Errc::NotRinged,
           "no chain edge reaches locally-finite from this input");
    }
    case FactorTarget::Wild: {
      if (rep.is_wild)
        return detail::finish_result(f, Word{{f}}, target, 0, opts);
      if (rep.is_local_finite) {
        auto res = factor_lf_to_wild(f, sub);
        return detail::finish_result(f, res.word, target, 0, opts);
      }
      if (rep.is_ringed) {
        auto lf = factor_ringed_to_lf(f, sub);
        Word word;
        for (const auto& factor : lf.word.factors) {
          auto wild = factor_lf_to_wild(factor, sub);
          for (const auto& w : wild.word.factors) word.factors.push_back(w);
        }
        return detail::finish_result(f, std::move(word), target, 0, opts);
      }
      fail(Errc::NotLocalFinite, "no chain edge reaches wild from this input");
    }
    case FactorTarget::SOmegaN: {
      if (n < 2)
        fail(Errc::BadConstruction, "order target must be at least 2");
      if (rep.in_I_n && *rep.in_I_n == n) {
        auto res = factor_order_n(f, n, sub);
        return detail::finish_result(f, res.word, target, n, opts);
      }
      fail(Errc::WrongOrder,
           "input order is " + rep.order.str() + ", not " + std::to_string(n));
    }
  }
  fail(Errc::BadConstruction, "unreachable chain target");
}

}  // namespace infperm
