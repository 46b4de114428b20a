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
#include <optional>

#include "dirlab/mulset.hpp"

namespace dirlab {

/// Nonnegative rational kept in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational reduced(std::uint64_t num, std::uint64_t den);
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Exact comparison of a/b against c/d by cross multiplication.
int compare(const Rational& lhs, const Rational& rhs);

struct DoublingReport {
  std::uint64_t size_D = 0;
  std::uint64_t size_DD = 0;
  std::uint64_t size_triple = 0;  // |D D^-1 D^-1|
  Rational c;                     // |DD| / |D|
  bool hypothesis_holds = false;  // 2 |D D^-1 D^-1| <= q + 1
  bool pr_sufficient_holds = false;  // 2 c^3 |D| <= q + 1

  friend bool operator==(const DoublingReport&, const DoublingReport&) = default;
};

struct CosetDecomposition {
  Elem a = 1;
  MulSet subgroup;
  std::uint32_t index = 1;
};

/// {ab : a in A, b in B}. Throws ContextMismatch or EmptySet.
MulSet product_set(const MulSet& A, const MulSet& B);
/// {a^-1 : a in A}. Throws EmptySet.
MulSet inverse_set(const MulSet& A);
/// D D^-1 D^-1. Throws EmptySet.
MulSet triple_quotient(const MulSet& D);
/// Throws EmptySet.
DoublingReport doubling_report(const MulSet& D);

/// Returns (a, K, [F_q^* : K]) when D = aK for a subgroup K, with a the
/// smallest code in D; nullopt otherwise. Throws EmptySet.
std::optional<CosetDecomposition> coset_decompose(const MulSet& D);

/// a * S elementwise; a must be nonzero.
MulSet scale_set(Elem a, const MulSet& S);

/// True when the nonempty set S is closed under multiplication (hence a subgroup).
bool is_subgroup(const MulSet& S);

/// Whether 2 c^3 |D| <= q + 1 in exact integer arithmetic.
bool cube_bound_holds(const Rational& c, std::uint64_t size_D, std::uint64_t q);

}  // namespace dirlab
