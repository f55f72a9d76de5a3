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

#include <string>
#include <vector>

#include "json.hpp"

#include "infperm/cardinal.hpp"
#include "infperm/classes.hpp"
#include "infperm/factor.hpp"
#include "infperm/scheme.hpp"
#include "infperm/seq.hpp"

namespace infperm::json_io {

using nlohmann::json;

//============================================================================
// Canonical rendering: sorted keys (nlohmann objects are ordered maps),
// compact separators, one trailing newline.
//============================================================================

inline std::string canonical(const json& j) { return j.dump() + "\n"; }

//============================================================================
// Helpers
//============================================================================

namespace detail {

inline const json& field(const json& j, const char* name,
                         const std::string& ctx) {
  auto it = j.find(name);
  if (it == j.end())
    fail(Errc::ParseError, ctx + ": missing field '" + name + "'");
  return *it;
}

inline Int int_field(const json& j, const std::string& ctx) {
  if (!j.is_number_integer())
    fail(Errc::ParseError, ctx + ": expected an integer");
  return j.get<Int>();
}

inline std::vector<Int> int_array(const json& j, const std::string& ctx) {
  if (!j.is_array()) fail(Errc::ParseError, ctx + ": expected an array");
  std::vector<Int> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(int_field(e, ctx));
  return out;
}

inline std::string string_field(const json& j, const std::string& ctx) {
  if (!j.is_string()) fail(Errc::ParseError, ctx + ": expected a string");
  return j.get<std::string>();
}

}  // namespace detail

//============================================================================
// Cardinals and censuses
//============================================================================

inline json cardinal_to_json(const Cardinal& c) {
  if (c.finite) return json(c.n);
  return json("w");
}

inline Cardinal cardinal_from_json(const json& j, const std::string& ctx) {
  if (j.is_string()) {
    if (j.get<std::string>() == "w") return Cardinal::inf();
    fail(Errc::ParseError, ctx + ": cardinal string must be \"w\"");
  }
  Int n = detail::int_field(j, ctx);
  if (n < 0) fail(Errc::ParseError, ctx + ": cardinal must be nonnegative");
  return Cardinal::fin(n);
}

inline json census_to_json(const OrbitCensus& c) {
  json j = json::object();
  for (const auto& [size, count] : c.finite)
    j[std::to_string(size)] = cardinal_to_json(count);
  if (!c.infinite.is_zero()) j["inf"] = cardinal_to_json(c.infinite);
  return j;
}

inline OrbitCensus census_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "census: expected an object");
  OrbitCensus c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    Cardinal count = cardinal_from_json(it.value(), "census count");
    if (it.key() == "inf") {
      c.add_infinite(count);
      continue;
    }
    if (it.key().empty() ||
        it.key().find_first_not_of("0123456789") != std::string::npos)
      fail(Errc::ParseError, "census: key '" + it.key() +
                                 "' is neither an orbit size nor \"inf\"");
    c.add_finite(std::stoll(it.key()), count);
  }
  return c;
}

//============================================================================
// Sequences
//============================================================================

inline json seq_to_json(const Sequence& s) {
  json j = json::object();
  switch (s.kind()) {
    case SeqKind::Affine:
      j["kind"] = "affine";
      j["a"] = s.node().a;
      j["b"] = s.node().b;
      j["domain"] =
          s.node().affine_domain.kind == Domain::Kind::Nat ? "nat" : "int";
      break;
    case SeqKind::Finite:
      j["kind"] = "finite";
      j["elements"] = s.node().elements;
      break;
    case SeqKind::Interleave: {
      j["kind"] = "interleave";
      json parts = json::array();
      for (size_t k = 0; k < s.node().children.size(); ++k)
        parts.push_back(seq_to_json(s.child(k)));
      j["parts"] = std::move(parts);
      break;
    }
    case SeqKind::Splice:
      j["kind"] = "splice";
      j["left"] = seq_to_json(s.child(0));
      j["middle"] = s.node().elements;
      j["right"] = seq_to_json(s.child(1));
      break;
    case SeqKind::Reindex:
      j["kind"] = "reindex";
      j["base"] = seq_to_json(s.child(0));
      j["index"] = seq_to_json(s.child(1));
      break;
    case SeqKind::DyadicRow:
      j["kind"] = "dyadic_row";
      j["base"] = seq_to_json(s.child(0));
      j["row"] = s.node().row;
      break;
  }
  return j;
}

inline Sequence seq_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "sequence: expected an object");
  std::string kind =
      detail::string_field(detail::field(j, "kind", "sequence"), "sequence");
  if (kind == "affine") {
    std::string d = detail::string_field(
        detail::field(j, "domain", "affine"), "affine domain");
    if (d != "nat" && d != "int")
      fail(Errc::ParseError, "affine domain must be \"nat\" or \"int\"");
    return Sequence::affine(
        detail::int_field(detail::field(j, "a", "affine"), "affine a"),
        detail::int_field(detail::field(j, "b", "affine"), "affine b"),
        d == "nat" ? Domain::nat() : Domain::integers());
  }
  if (kind == "finite")
    return Sequence::finite(detail::int_array(
        detail::field(j, "elements", "finite"), "finite elements"));
  if (kind == "interleave") {
    const json& parts = detail::field(j, "parts", "interleave");
    if (!parts.is_array())
      fail(Errc::ParseError, "interleave parts: expected an array");
    std::vector<Sequence> seqs;
    seqs.reserve(parts.size());
    for (const auto& p : parts) seqs.push_back(seq_from_json(p));
    return Sequence::interleave(std::move(seqs));
  }
  if (kind == "splice")
    return Sequence::splice(
        seq_from_json(detail::field(j, "left", "splice")),
        detail::int_array(detail::field(j, "middle", "splice"),
                          "splice middle"),
        seq_from_json(detail::field(j, "right", "splice")));
  if (kind == "reindex")
    return Sequence::reindex(
        seq_from_json(detail::field(j, "base", "reindex")),
        seq_from_json(detail::field(j, "index", "reindex")));
  if (kind == "dyadic_row") {
    Int row = detail::int_field(detail::field(j, "row", "dyadic_row"),
                                "dyadic_row row");
    return Sequence::dyadic_row(
        seq_from_json(detail::field(j, "base", "dyadic_row")),
        static_cast<int>(row));
  }
  fail(Errc::ParseError, "unknown sequence kind '" + kind + "'");
}

//============================================================================
// Indexers
//============================================================================

inline json indexer_to_json(const Indexer2& ix) {
  json j = json::object();
  if (ix.kind() == IndexerKind::Rows) {
    j["kind"] = "rows";
    j["row_length"] = ix.row_length();
    j["base"] = seq_to_json(ix.base());
  } else {
    j["kind"] = "grid";
    j["base"] = seq_to_json(ix.base());
  }
  return j;
}

inline Indexer2 indexer_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "indexer: expected an object");
  std::string kind =
      detail::string_field(detail::field(j, "kind", "indexer"), "indexer");
  if (kind == "rows")
    return Indexer2::rows(
        detail::int_field(detail::field(j, "row_length", "rows"),
                          "rows row_length"),
        seq_from_json(detail::field(j, "base", "rows")));
  if (kind == "grid")
    return Indexer2::grid(seq_from_json(detail::field(j, "base", "grid")));
  fail(Errc::ParseError, "unknown indexer kind '" + kind + "'");
}

//============================================================================
// Orbit families, schemes, words
//============================================================================

inline json family_to_json(const OrbitFamily& f) {
  json j = json::object();
  switch (f.kind()) {
    case FamilyKind::FinCycle:
      j["kind"] = "fin_cycle";
      j["elements"] = f.cycle();
      break;
    case FamilyKind::FinCycleFamily:
      j["kind"] = "fin_cycle_family";
      j["length"] = f.length();
      j["indexer"] = indexer_to_json(f.indexer());
      if (f.reversed()) j["reversed"] = true;
      break;
    case FamilyKind::InfCycle:
      j["kind"] = "inf_cycle";
      j["enumeration"] = seq_to_json(f.enumeration());
      break;
    case FamilyKind::InfCycleFamily:
      j["kind"] = "inf_cycle_family";
      j["indexer"] = indexer_to_json(f.indexer());
      if (f.reversed()) j["reversed"] = true;
      break;
  }
  return j;
}

inline OrbitFamily family_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "family: expected an object");
  std::string kind =
      detail::string_field(detail::field(j, "kind", "family"), "family");
  bool reversed = false;
  if (auto it = j.find("reversed"); it != j.end()) {
    if (!it->is_boolean())
      fail(Errc::ParseError, "family reversed: expected a boolean");
    reversed = it->get<bool>();
  }
  if (kind == "fin_cycle")
    return OrbitFamily::fin_cycle(detail::int_array(
        detail::field(j, "elements", "fin_cycle"), "fin_cycle elements"));
  if (kind == "fin_cycle_family")
    return OrbitFamily::fin_cycle_family(
        detail::int_field(detail::field(j, "length", "fin_cycle_family"),
                          "fin_cycle_family length"),
        indexer_from_json(detail::field(j, "indexer", "fin_cycle_family")),
        reversed);
  if (kind == "inf_cycle")
    return OrbitFamily::inf_cycle(
        seq_from_json(detail::field(j, "enumeration", "inf_cycle")));
  if (kind == "inf_cycle_family")
    return OrbitFamily::inf_cycle_family(
        indexer_from_json(detail::field(j, "indexer", "inf_cycle_family")),
        reversed);
  fail(Errc::ParseError, "unknown family kind '" + kind + "'");
}

inline json scheme_to_json(const Scheme& s) {
  json j = json::object();
  if (s.name) j["name"] = *s.name;
  json fams = json::array();
  for (const auto& f : s.families) fams.push_back(family_to_json(f));
  j["families"] = std::move(fams);
  if (s.fixed_set) j["fixed_set"] = seq_to_json(*s.fixed_set);
  return j;
}

inline Scheme scheme_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "scheme: expected an object");
  Scheme s;
  if (auto it = j.find("name"); it != j.end())
    s.name = detail::string_field(*it, "scheme name");
  const json& fams = detail::field(j, "families", "scheme");
  if (!fams.is_array())
    fail(Errc::ParseError, "scheme families: expected an array");
  for (const auto& f : fams) s.families.push_back(family_from_json(f));
  if (auto it = j.find("fixed_set"); it != j.end())
    s.fixed_set = seq_from_json(*it);
  return s;
}

inline json word_to_json(const Word& w) {
  json factors = json::array();
  for (const auto& f : w.factors) factors.push_back(scheme_to_json(f));
  return json{{"factors", std::move(factors)}};
}

inline Word word_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "word: expected an object");
  const json& factors = detail::field(j, "factors", "word");
  if (!factors.is_array())
    fail(Errc::ParseError, "word factors: expected an array");
  Word w;
  for (const auto& f : factors) w.factors.push_back(scheme_from_json(f));
  return w;
}

//============================================================================
// Reports
//============================================================================

inline json validation_report_to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"check", c.check},
           {"evidence", evidence_name(c.evidence)},
           {"ok", c.ok}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  return json{{"ok", r.ok}, {"checks", std::move(checks)}};
}

inline json structural_report_to_json(const StructuralReport& r) {
  json j{{"order", cardinal_to_json(r.order)},
         {"local_finite", r.is_local_finite},
         {"wild", r.is_wild},
         {"ringed", r.is_ringed},
         {"ringed_evidence", r.ringed_evidence}};
  j["in_I_n"] = r.in_I_n ? json(*r.in_I_n) : json(nullptr);
  return j;
}

inline json certificate_to_json(const FactorCertificate& c) {
  json j{{"kind", c.kind}, {"pass", c.pass}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (c.report) j["report"] = structural_report_to_json(*c.report);
  if (c.census) j["census"] = census_to_json(*c.census);
  return j;
}

inline json verification_to_json(const VerificationReport& v) {
  json j{{"windows", v.windows}, {"mismatches", v.mismatches}};
  if (!v.examples.empty()) {
    json ex = json::array();
    for (const auto& e : v.examples)
      ex.push_back(json{{"x", e.x}, {"want", e.want}, {"got", e.got}});
    j["examples"] = std::move(ex);
  }
  return j;
}

inline json factorization_to_json(const FactorizationResult& r) {
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(certificate_to_json(c));
  return json{{"input", scheme_to_json(r.input)},
              {"word", word_to_json(r.word)},
              {"target", r.target_name()},
              {"certificates", std::move(certs)},
              {"verification", verification_to_json(r.verification)}};
}

}  // namespace infperm::json_io
