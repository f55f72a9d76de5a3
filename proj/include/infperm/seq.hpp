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
#include <memory>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "infperm/common.hpp"

namespace infperm {

//============================================================================
// Domains
//============================================================================

// Index domain of a symbolic sequence: all of N, all of Z, or {0..n-1}.
struct Domain {
  enum class Kind { Nat, Int, Fin };
  Kind kind = Kind::Nat;
  Int size = 0;  // meaningful for Fin only

  static Domain nat() { return {Kind::Nat, 0}; }
  static Domain integers() { return {Kind::Int, 0}; }
  static Domain fin(Int n) { return {Kind::Fin, n}; }

  bool contains(Int i) const {
    switch (kind) {
      case Kind::Nat: return i >= 0;
      case Kind::Int: return true;
      case Kind::Fin: return i >= 0 && i < size;
    }
    return false;
  }
  bool is_infinite() const { return kind != Kind::Fin; }
  bool operator==(const Domain& o) const {
    return kind == o.kind && (kind != Kind::Fin || size == o.size);
  }
};

// Indices exercised by validation/verification at a given window radius.
inline std::vector<Int> window_indices(const Domain& d, Int n) {
  std::vector<Int> out;
  switch (d.kind) {
    case Domain::Kind::Nat:
      out.reserve(static_cast<size_t>(n) + 1);
      for (Int i = 0; i <= n; ++i) out.push_back(i);
      break;
    case Domain::Kind::Int:
      out.reserve(static_cast<size_t>(2 * n) + 1);
      for (Int i = -n; i <= n; ++i) out.push_back(i);
      break;
    case Domain::Kind::Fin: {
      Int m = std::min(d.size, 2 * n + 1);
      out.reserve(static_cast<size_t>(m));
      for (Int i = 0; i < m; ++i) out.push_back(i);
      break;
    }
  }
  return out;
}

//============================================================================
// Sequence: a symbolic injective map from its domain into Z
//============================================================================

enum class SeqKind { Affine, Finite, Interleave, Splice, Reindex, DyadicRow };

class Sequence;

struct SeqNode {
  SeqKind kind;
  // Affine
  Int a = 0, b = 0;
  Domain affine_domain = Domain::nat();
  // Finite / Splice middle
  std::vector<Int> elements;
  // Interleave parts / Splice{left,right} / Reindex{base,index} / DyadicRow{base}
  std::vector<std::shared_ptr<const SeqNode>> children;
  // DyadicRow
  int row = 0;
};

class Sequence {
 public:
  //------------------------------------------------------------- factories --
  // i -> a*i + b over the given (infinite) domain; a must be nonzero.
  static Sequence affine(Int a, Int b, Domain d) {
    if (a == 0) fail(Errc::BadConstruction, "affine sequence requires a != 0");
    if (!d.is_infinite())
      fail(Errc::BadConstruction, "affine domain must be nat or int");
    auto n = std::make_shared<SeqNode>();
    n->kind = SeqKind::Affine;
    n->a = a;
    n->b = b;
    n->affine_domain = d;
    return Sequence(std::move(n));
  }

  // Explicit list over {0..len-1}; elements must be pairwise distinct.
  static Sequence finite(std::vector<Int> elems) {
    std::vector<Int> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Errc::BadConstruction, "finite sequence has duplicate elements");
    auto n = std::make_shared<SeqNode>();
    n->kind = SeqKind::Finite;
    n->elements = std::move(elems);
    return Sequence(std::move(n));
  }

  // i -> parts[i mod m](i div m); every part must be over N.
  static Sequence interleave(std::vector<Sequence> parts) {
    if (parts.empty())
      fail(Errc::BadConstruction, "interleave requires at least one part");
    auto n = std::make_shared<SeqNode>();
    n->kind = SeqKind::Interleave;
    for (auto& p : parts) {
      if (!(p.domain() == Domain::nat()))
        fail(Errc::BadConstruction, "interleave parts must be over nat");
      n->children.push_back(p.node_);
    }
    return Sequence(std::move(n));
  }

  // Bi-infinite enumeration over Z:
  //   i < 0        -> left(-i-1)
  //   0 <= i < len -> middle[i]
  //   i >= len     -> right(i-len)
  static Sequence splice(Sequence left, std::vector<Int> middle,
                         Sequence right) {
    if (!(left.domain() == Domain::nat()) ||
        !(right.domain() == Domain::nat()))
      fail(Errc::BadConstruction, "splice halves must be over nat");
    std::vector<Int> sorted = middle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Errc::BadConstruction, "splice middle has duplicate elements");
    auto n = std::make_shared<SeqNode>();
    n->kind = SeqKind::Splice;
    n->elements = std::move(middle);
    n->children = {left.node_, right.node_};
    return Sequence(std::move(n));
  }

  // i -> base(index(i)); resulting domain is index's domain.
  static Sequence reindex(Sequence base, Sequence index) {
    auto n = std::make_shared<SeqNode>();
    n->kind = SeqKind::Reindex;
    n->children = {base.node_, index.node_};
    return Sequence(std::move(n));
  }

  // j -> base(2^row * (2j+1) - 1); base must be over N. Distinct rows of the
  // same base have disjoint argument sets, so they partition N.
  static Sequence dyadic_row(Sequence base, int row) {
    if (row < 0 || row > 61)
      fail(Errc::BadConstruction, "dyadic row index out of range");
    if (!(base.domain() == Domain::nat()))
      fail(Errc::BadConstruction, "dyadic row base must be over nat");
    auto n = std::make_shared<SeqNode>();
    n->kind = SeqKind::DyadicRow;
    n->children = {base.node_};
    n->row = row;
    return Sequence(std::move(n));
  }

  //------------------------------------------------------------- structure --
  SeqKind kind() const { return node_->kind; }
  const SeqNode& node() const { return *node_; }
  Sequence child(size_t k) const { return Sequence(node_->children.at(k)); }

  Domain domain() const {
    switch (node_->kind) {
      case SeqKind::Affine: return node_->affine_domain;
      case SeqKind::Finite:
        return Domain::fin(static_cast<Int>(node_->elements.size()));
      case SeqKind::Interleave: return Domain::nat();
      case SeqKind::Splice: return Domain::integers();
      case SeqKind::Reindex: return child(1).domain();
      case SeqKind::DyadicRow: return Domain::nat();
    }
    return Domain::nat();
  }

  bool operator==(const Sequence& o) const { return equal(*node_, *o.node_); }

  //------------------------------------------------------------ evaluation --
  Int eval(Int i) const {
    if (!domain().contains(i))
      fail(Errc::IndexOutOfDomain, "sequence evaluated outside its domain");
    switch (node_->kind) {
      case SeqKind::Affine: return checked_affine(node_->a, node_->b, i);
      case SeqKind::Finite: return node_->elements[static_cast<size_t>(i)];
      case SeqKind::Interleave: {
        Int m = static_cast<Int>(node_->children.size());
        return child(static_cast<size_t>(i % m)).eval(i / m);
      }
      case SeqKind::Splice: {
        Int len = static_cast<Int>(node_->elements.size());
        if (i < 0) return child(0).eval(checked_neg(checked_add(i, 1)));
        if (i < len) return node_->elements[static_cast<size_t>(i)];
        return child(1).eval(i - len);
      }
      case SeqKind::Reindex: return child(0).eval(child(1).eval(i));
      case SeqKind::DyadicRow: {
        i128 arg = (i128(1) << node_->row) * (i128(2) * i + 1) - 1;
        return child(0).eval(check_value(arg, "dyadic argument exceeds cap"));
      }
    }
    fail(Errc::BadConstruction, "unreachable sequence kind");
  }

  // Partial inverse: the index mapping to v, if v is in range. For spliced
  // enumerations the middle and right half are consulted before the left
  // half, so helper sequences whose left half is a value-disjoint filler
  // never shadow a genuine hit.
  std::optional<Int> locate(Int v) const {
    switch (node_->kind) {
      case SeqKind::Affine: {
        Int d = v - node_->b;
        if (d % node_->a != 0) return std::nullopt;
        Int i = d / node_->a;
        if (!node_->affine_domain.contains(i)) return std::nullopt;
        return i;
      }
      case SeqKind::Finite: {
        for (size_t k = 0; k < node_->elements.size(); ++k)
          if (node_->elements[k] == v) return static_cast<Int>(k);
        return std::nullopt;
      }
      case SeqKind::Interleave: {
        Int m = static_cast<Int>(node_->children.size());
        for (Int p = 0; p < m; ++p)
          if (auto j = child(static_cast<size_t>(p)).locate(v))
            return checked_add(checked_mul(*j, m), p);
        return std::nullopt;
      }
      case SeqKind::Splice: {
        Int len = static_cast<Int>(node_->elements.size());
        for (Int k = 0; k < len; ++k)
          if (node_->elements[static_cast<size_t>(k)] == v) return k;
        if (auto j = child(1).locate(v)) return checked_add(*j, len);
        if (auto j = child(0).locate(v)) return checked_neg(checked_add(*j, 1));
        return std::nullopt;
      }
      case SeqKind::Reindex: {
        auto j = child(0).locate(v);
        if (!j) return std::nullopt;
        return child(1).locate(*j);
      }
      case SeqKind::DyadicRow: {
        auto n = child(0).locate(v);
        if (!n || *n < 0) return std::nullopt;
        Int m = *n + 1;
        if (m <= 0) return std::nullopt;
        if (dyadic_valuation(m) != node_->row) return std::nullopt;
        return ((m >> node_->row) - 1) / 2;
      }
    }
    return std::nullopt;
  }

  //------------------------------------------------------------- evidence ---
  // Injectivity is known by construction for affine maps, distinct finite
  // lists, and dyadic rows of such; composite nodes rest on window checks.
  Evidence injectivity_evidence() const {
    switch (node_->kind) {
      case SeqKind::Affine:
      case SeqKind::Finite: return Evidence::Proved;
      case SeqKind::DyadicRow: return child(0).injectivity_evidence();
      case SeqKind::Interleave:
      case SeqKind::Splice:
      case SeqKind::Reindex: return Evidence::WindowChecked;
    }
    return Evidence::WindowChecked;
  }

  //------------------------------------------------------------ validation --
  ValidationReport validate(Int window) const {
    ValidationReport rep;
    // Structural check specific to reindex: the inner index must land inside
    // the base's domain throughout the window.
    validate_structure(window, rep);
    // Whole-tree injectivity on the window, plus the inverse-lookup
    // round-trip law at every window index.
    CheckResult inj;
    inj.check = "injective_on_window";
    inj.evidence = injectivity_evidence();
    CheckResult rt;
    rt.check = "locate_roundtrip_on_window";
    rt.evidence = Evidence::WindowChecked;
    std::unordered_map<Int, Int> seen;  // value -> index
    for (Int i : window_indices(domain(), window)) {
      Int v;
      try {
        v = eval(i);
      } catch (const Error& e) {
        inj.ok = false;
        inj.detail = "evaluation failed at index " + std::to_string(i) + ": " +
                     e.what();
        break;
      }
      auto [it, fresh] = seen.emplace(v, i);
      if (!fresh) {
        inj.ok = false;
        inj.detail = "value " + std::to_string(v) + " hit at indices " +
                     std::to_string(it->second) + " and " + std::to_string(i);
        break;
      }
      if (rt.ok) {
        auto back = locate(v);
        if (!back || *back != i) {
          rt.ok = false;
          rt.detail = "locate(eval(" + std::to_string(i) + ")) = " +
                      (back ? std::to_string(*back) : std::string("absent"));
        }
      }
    }
    rep.add(std::move(inj));
    rep.add(std::move(rt));
    return rep;
  }

 private:
  explicit Sequence(std::shared_ptr<const SeqNode> n) : node_(std::move(n)) {}

  static bool equal(const SeqNode& x, const SeqNode& y) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
      case SeqKind::Affine:
        return x.a == y.a && x.b == y.b && x.affine_domain == y.affine_domain;
      case SeqKind::Finite: return x.elements == y.elements;
      case SeqKind::Splice:
        if (x.elements != y.elements) return false;
        break;
      case SeqKind::DyadicRow:
        if (x.row != y.row) return false;
        break;
      default: break;
    }
    if (x.children.size() != y.children.size()) return false;
    for (size_t k = 0; k < x.children.size(); ++k)
      if (!equal(*x.children[k], *y.children[k])) return false;
    return true;
  }

  void validate_structure(Int window, ValidationReport& rep) const {
    for (size_t k = 0; k < node_->children.size(); ++k)
      child(k).validate_structure(window, rep);
    if (node_->kind == SeqKind::Reindex) {
      CheckResult c;
      c.check = "reindex_lands_in_base_domain";
      c.evidence = Evidence::WindowChecked;
      Domain bd = child(0).domain();
      for (Int i : window_indices(domain(), window)) {
        Int j;
        try {
          j = child(1).eval(i);
        } catch (const Error& e) {
          c.ok = false;
          c.detail = std::string("index evaluation failed: ") + e.what();
          break;
        }
        if (!bd.contains(j)) {
          c.ok = false;
          c.detail = "index " + std::to_string(i) + " maps to " +
                     std::to_string(j) + " outside base domain";
          break;
        }
      }
      rep.add(std::move(c));
    }
  }

  std::shared_ptr<const SeqNode> node_;
};

//============================================================================
// Stock sequences and assembly gadgets
//============================================================================

inline Sequence seq_identity_nat() {
  return Sequence::affine(1, 0, Domain::nat());
}
inline Sequence seq_identity_int() {
  return Sequence::affine(1, 0, Domain::integers());
}

// N -> Z zig-zag bijection: 0, -1, 1, -2, 2, ...
inline Sequence zig_nz() {
  return Sequence::interleave({Sequence::affine(1, 0, Domain::nat()),
                               Sequence::affine(-1, -1, Domain::nat())});
}

// Z -> N zig-zag bijection (i >= 0 -> 2i, i < 0 -> -2i-1). Inverse companion
// of zig_nz: composing it after zig_nz gives the identity on N.
inline Sequence zig_zn() {
  return Sequence::splice(Sequence::affine(2, 1, Domain::nat()), {},
                          Sequence::affine(2, 0, Domain::nat()));
}

// Subsampling gadgets over N.
inline Sequence seq_stride(Sequence s, Int m, Int r) {
  return Sequence::reindex(std::move(s), Sequence::affine(m, r, Domain::nat()));
}
inline Sequence seq_evens(Sequence s) { return seq_stride(std::move(s), 2, 0); }
inline Sequence seq_odds(Sequence s) { return seq_stride(std::move(s), 2, 1); }
inline Sequence seq_drop(Sequence s, Int k) {
  return seq_stride(std::move(s), 1, k);
}

// Reverse a Z-indexed enumeration: i -> e(-i). Collapses a double reversal
// back to the original enumeration.
inline Sequence seq_reverse_int(const Sequence& e) {
  if (e.kind() == SeqKind::Reindex) {
    Sequence idx = e.child(1);
    if (idx.kind() == SeqKind::Affine && idx.node().a == -1 &&
        idx.node().b == 0 && idx.node().affine_domain == Domain::integers())
      return e.child(0);
  }
  return Sequence::reindex(e, Sequence::affine(-1, 0, Domain::integers()));
}

// Present an N-indexed enumeration on the Z index domain (same range).
inline Sequence seq_on_int_domain(Sequence s) {
  return Sequence::reindex(std::move(s), zig_zn());
}

// Index gadget over N: i < |head| -> head[i], i >= |head| -> a*(i-|head|)+b.
// Built as a reindexed splice whose left half is a filler ray chosen
// value-disjoint from head and the affine tail.
inline Sequence idx_concat(const std::vector<Int>& head, Int a, Int b) {
  if (head.empty() && b == 0 && a > 0)
    return Sequence::affine(a, 0, Domain::nat());
  Int lo = b, hi = b;
  for (Int x : head) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  Sequence filler = a > 0 ? Sequence::affine(-1, lo - 1, Domain::nat())
                          : Sequence::affine(1, hi + 1, Domain::nat());
  return Sequence::reindex(
      Sequence::splice(std::move(filler), head,
                       Sequence::affine(a, b, Domain::nat())),
      Sequence::affine(1, 0, Domain::nat()));
}

// N-domain concatenation: i < |prefix| -> prefix[i],
//                         i >= |prefix| -> tail(i - |prefix|).
// The prefix occupies the splice middle; the tail is recovered by routing
// even tail offsets to the spliced-out even subsequence (stored on the left
// half) and odd offsets to the odd subsequence (stored on the right half).
inline Sequence nat_concat(const std::vector<Int>& prefix, Sequence tail) {
  if (!(tail.domain() == Domain::nat()))
    fail(Errc::BadConstruction, "nat_concat tail must be over nat");
  if (prefix.empty()) return tail;
  const Int t = static_cast<Int>(prefix.size());
  std::vector<Int> ev, od;  // positions <t split by parity
  for (Int i = 0; i < t; i += 2) ev.push_back(i);
  for (Int i = 1; i < t; i += 2) od.push_back(i);
  Sequence q0 = (t % 2 == 0) ? idx_concat(ev, -1, -1) : idx_concat(ev, 1, t);
  Sequence q1 = (t % 2 == 0) ? idx_concat(od, 1, t) : idx_concat(od, -1, -1);
  Sequence sigma = Sequence::interleave({std::move(q0), std::move(q1)});
  Sequence spliced =
      Sequence::splice(seq_evens(tail), prefix, seq_odds(tail));
  return Sequence::reindex(std::move(spliced), std::move(sigma));
}

}  // namespace infperm
