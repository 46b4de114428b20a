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

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dirlab {

/// A field element, encoded as the base-p packing sum(a_i * p^i) of its
/// polynomial-basis coordinates. Code 0 is zero and code 1 is one.
using Elem = std::uint32_t;

/// Largest field order accepted by build_field.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  /// n+1 coefficients over F_p, constant term first, leading coefficient 1.
  std::optional<std::vector<std::uint32_t>> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Parses the three-line field file: `p=<int>`, `n=<int>`, optional
/// `modulus=<c0,...,cn>`. Blank lines and `#` comments are ignored.
FieldSpec parse_field_spec(std::string_view text);
FieldSpec load_field_spec(const std::string& path);

bool is_prime(std::uint64_t v);

/// Immutable arithmetic context for GF(p^n). Multiplication, division and
/// powers go through discrete log tables relative to a fixed primitive
/// element; addition works on base-p digits (a q*q table for q <= 256).
class FieldCtx {
 public:
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Order of the multiplicative group, q - 1.
  std::uint32_t group_order() const noexcept { return q_ - 1; }

  /// Resolved modulus, n+1 coefficients with the leading 1 included.
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }
  /// Spec echo with the modulus always filled in.
  FieldSpec resolved_spec() const { return FieldSpec{p_, n_, modulus_}; }
  Elem generator() const noexcept { return generator_; }

  bool valid(Elem e) const noexcept { return e < q_; }
  /// Throws InvalidElement when e is not a code of this field.
  void check(Elem e) const;

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const { return neg_table_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp2_[static_cast<std::size_t>(log_[a]) + log_[b]];
  }
  /// Throws DivisionByZero when b == 0.
  Elem div(Elem a, Elem b) const;
  /// Throws DivisionByZero when a == 0.
  Elem inv(Elem a) const;
  /// Any integer exponent; negative exponents need a nonzero base. 0^0 = 1.
  Elem pow(Elem a, std::int64_t k) const;

  /// e^(p^j), 0 <= j < n. Throws JOutOfRange otherwise.
  Elem frobenius(Elem e, std::uint32_t j) const;

  /// Discrete log to base generator(). Throws DivisionByZero for 0.
  std::uint32_t log(Elem e) const;
  /// generator()^k for any k (taken mod q-1).
  Elem antilog(std::uint64_t k) const { return exp2_[k % group_order()]; }

  /// Log table indexed by code; entry 0 holds kNoLog.
  std::span<const std::uint32_t> log_table() const noexcept { return log_; }
  /// generator()^k for 0 <= k < q-1.
  std::span<const Elem> antilog_table() const noexcept {
    return std::span<const Elem>(exp2_).first(group_order());
  }

  /// Base-p coordinates (constant first) of e, length n.
  std::vector<std::uint32_t> digits(Elem e) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  /// True when both contexts describe the same field model.
  bool same_model(const FieldCtx& other) const noexcept {
    return this == &other || (p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_);
  }

  static constexpr std::uint32_t kNoLog = 0xffffffffu;

 private:
  friend std::shared_ptr<const FieldCtx> build_field(const FieldSpec& spec);
  FieldCtx() = default;

  Elem add_digits(Elem a, Elem b) const;

  std::uint32_t p_ = 0;
  std::uint32_t n_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Elem generator_ = 1;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp2_;  // antilog, doubled so log sums need no reduction
  std::vector<Elem> neg_table_;
  std::vector<Elem> add_table_;
  std::vector<std::uint32_t> frob_mult_;  // p^j mod (q-1)
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Builds GF(p^n). Without an explicit modulus the first irreducible monic
/// polynomial in ascending encoding order is used; the generator is the
/// smallest code of multiplicative order q-1.
FieldPtr build_field(const FieldSpec& spec);

inline FieldPtr build_field(std::uint32_t p, std::uint32_t n) { return build_field(FieldSpec{p, n, {}}); }

/// Monic irreducible test over F_p by trial division; coefficients constant first.
bool is_irreducible_over_prime(std::span<const std::uint32_t> poly, std::uint32_t p);

/// First irreducible monic degree-n polynomial over F_p in encoding order.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t n);

}  // namespace dirlab
