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

#include <optional>
#include <utility>

#include "infperm/seq.hpp"

namespace infperm {

// Zig-zag bijection Z -> N used by the dyadic grid: 0,-1,1,-2,2,... in
// argument order, i.e. i>=0 -> 2i and i<0 -> -2i-1.
inline Int zigzag_fold(Int i) {
  return i >= 0 ? checked_mul(2, i) : checked_neg(checked_add(checked_mul(2, i), 1));
}
inline Int zigzag_unfold(Int n) {
  return n % 2 == 0 ? n / 2 : -(n + 1) / 2;
}

//============================================================================
// Indexer2: a two-argument window into a base enumeration over N.
//
//   rows(L, base): (k, j) -> base(L*k + j)      k in N, j in {0..L-1}
//   grid(base):    (k, i) -> base(2^k * (2*zigzag_fold(i) + 1) - 1)
//                                                k in N, i in Z
//
// Both argument maps are bijections onto N, so an indexer repartitions the
// base enumeration without losing or duplicating entries: rows() into
// infinitely many length-L rows, grid() into infinitely many bi-infinite
// rows.
//============================================================================

enum class IndexerKind { Rows, Grid };

class Indexer2 {
 public:
  static Indexer2 rows(Int row_length, Sequence base) {
    if (row_length < 1)
      fail(Errc::BadConstruction, "rows indexer needs positive row length");
    if (!(base.domain() == Domain::nat()))
      fail(Errc::BadConstruction, "indexer base must be over nat");
    return Indexer2(IndexerKind::Rows, row_length, std::move(base));
  }

  static Indexer2 grid(Sequence base) {
    if (!(base.domain() == Domain::nat()))
      fail(Errc::BadConstruction, "indexer base must be over nat");
    return Indexer2(IndexerKind::Grid, 0, std::move(base));
  }

  IndexerKind kind() const { return kind_; }
  Int row_length() const { return row_length_; }
  const Sequence& base() const { return base_; }

  // Argument into the base enumeration for cell (k, j).
  Int arg(Int k, Int j) const {
    if (k < 0) fail(Errc::IndexOutOfDomain, "indexer row must be nonnegative");
    if (kind_ == IndexerKind::Rows) {
      if (j < 0 || j >= row_length_)
        fail(Errc::IndexOutOfDomain, "rows column outside row length");
      return checked_add(checked_mul(row_length_, k), j);
    }
    if (k > 61) fail(Errc::Overflow, "grid row exceeds representable range");
    i128 a = (i128(1) << k) * (i128(2) * zigzag_fold(j) + 1) - 1;
    return check_value(a, "grid argument exceeds value cap");
  }

  Int eval(Int k, Int j) const { return base_.eval(arg(k, j)); }

  // Cell owning base argument n (total: both argument maps partition N).
  std::pair<Int, Int> cell_of_arg(Int n) const {
    if (kind_ == IndexerKind::Rows)
      return {n / row_length_, n % row_length_};
    Int v = dyadic_valuation(n + 1);
    Int odd = (n + 1) >> v;
    return {v, zigzag_unfold((odd - 1) / 2)};
  }

  std::optional<std::pair<Int, Int>> locate(Int value) const {
    auto n = base_.locate(value);
    if (!n || *n < 0) return std::nullopt;
    return cell_of_arg(*n);
  }

  bool operator==(const Indexer2& o) const {
    return kind_ == o.kind_ && row_length_ == o.row_length_ && base_ == o.base_;
  }

  // The argument maps are bijections by construction, so the indexer is as
  // trustworthy as its base.
  Evidence injectivity_evidence() const {
    return base_.injectivity_evidence();
  }

  ValidationReport validate(Int window) const { return base_.validate(window); }

 private:
  Indexer2(IndexerKind k, Int l, Sequence b)
      : kind_(k), row_length_(l), base_(std::move(b)) {}

  IndexerKind kind_;
  Int row_length_;
  Sequence base_;
};

}  // namespace infperm
