/*
 * Copyright 2026 The dirlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dirlab/bitset.hpp"
#include "dirlab/field.hpp"

namespace dirlab {

/// A subset of the multiplicative group F_q^*, stored as a bitset indexed by
/// element code. Bit 0 is never set.
class MulSet {
 public:
  /// Empty set over ctx.
  explicit MulSet(FieldPtr ctx);

  /// Throws InvalidElement for code 0 or codes outside the field.
  static MulSet from_codes(FieldPtr ctx, std::span<const Elem> codes);
  static MulSet from_codes(FieldPtr ctx, std::initializer_list<Elem> codes) {
    return from_codes(std::move(ctx), std::span<const Elem>(codes.begin(), codes.size()));
  }
  /// bits.size() must equal q and bit 0 must be clear.
  static MulSet from_bits(FieldPtr ctx, Bitset bits);
  /// All of F_q^*.
  static MulSet full(FieldPtr ctx);

  const FieldCtx& field() const noexcept { return *ctx_; }
  const FieldPtr& field_ptr() const noexcept { return ctx_; }

  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool contains(Elem e) const noexcept { return e != 0 && e < bits_.size() && bits_.test(e); }
  bool is_subset_of(const MulSet& other) const { return bits_.is_subset_of(other.bits_); }

  /// Sorted element codes.
  std::vector<Elem> elements() const { return bits_.to_vector(); }
  const Bitset& bits() const noexcept { return bits_; }

  friend bool operator==(const MulSet& a, const MulSet& b) {
    return a.ctx_->same_model(*b.ctx_) && a.bits_ == b.bits_;
  }

 private:
  MulSet(FieldPtr ctx, Bitset bits) : ctx_(std::move(ctx)), bits_(std::move(bits)) {}

  FieldPtr ctx_;
  Bitset bits_;
};

/// The subgroup of index d in F_q^*, i.e. {x^d : x in F_q^*}.
/// Throws IndexDoesNotDivide unless d divides q-1.
MulSet subgroup_by_index(const FieldPtr& ctx, std::uint32_t d);

/// One (index, subgroup) entry per divisor of q-1, ascending by index.
std::vector<std::pair<std::uint32_t, MulSet>> all_subgroups(const FieldPtr& ctx);

/// Divisors of v in ascending order.
std::vector<std::uint32_t> divisors(std::uint32_t v);

}  // namespace dirlab
