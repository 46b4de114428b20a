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

#include <optional>
#include <vector>

#include "dirlab/directions.hpp"
#include "dirlab/field.hpp"

namespace dirlab {

/// x -> sum_j coeffs[j] * x^(p^j), j < n.
struct LinPoly {
  FieldPtr ctx;
  std::vector<Elem> coeffs;

  /// Throws InvalidTable unless coeffs has exactly n valid codes.
  LinPoly(FieldPtr ctx, std::vector<Elem> coeffs);
  /// a * x^(p^j).
  static LinPoly monomial(FieldPtr ctx, Elem a, std::uint32_t j);

  /// Number of nonzero coefficients.
  std::size_t weight() const;

  friend bool operator==(const LinPoly& a, const LinPoly& b) {
    return a.ctx->same_model(*b.ctx) && a.coeffs == b.coeffs;
  }
};

/// x -> a * x^(p^j) + b with a != 0.
struct FrobeniusMonomial {
  Elem a = 1;
  std::uint32_t j = 0;
  Elem b = 0;
  friend bool operator==(const FrobeniusMonomial&, const FrobeniusMonomial&) = default;
};

/// Dense univariate polynomial over F_q, constant term first. The highest
/// stored coefficient is nonzero; the zero polynomial has no coefficients.
struct DensePoly {
  FieldPtr ctx;
  std::vector<Elem> coeffs;

  DensePoly(FieldPtr ctx, std::vector<Elem> coeffs);
  /// c * x^k
  static DensePoly monomial(FieldPtr ctx, Elem c, std::size_t k);

  bool is_zero() const noexcept { return coeffs.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs.size()) - 1; }

  friend bool operator==(const DensePoly& a, const DensePoly& b) {
    return a.ctx->same_model(*b.ctx) && a.coeffs == b.coeffs;
  }
};

Elem lin_eval(const LinPoly& L, Elem x);
FuncTable to_table(const LinPoly& L);
FuncTable to_table(const FieldPtr& ctx, const FrobeniusMonomial& m);

/// Whether f(x + y) = f(x) + f(y) for all x, y.
bool is_additive(const FuncTable& f);

/// Coefficients of f as a linearized polynomial, or nullopt if f is not additive.
std::optional<LinPoly> detect_linearized(const FuncTable& f);

/// Matches f against a * x^(p^j) + b, returning the smallest valid j.
std::optional<FrobeniusMonomial> detect_frobenius_monomial(const FuncTable& f);

/// g(0) = 0 and g(x) = 1 / f(1/x) otherwise. Throws NonzeroAtOrigin or
/// ZeroValueAtNonzeroPoint.
FuncTable reciprocal_transform(const FuncTable& f);

/// Product over F_q. Throws ContextMismatch.
DensePoly poly_mul(const DensePoly& A, const DensePoly& B);

struct HIdentityResult {
  bool holds = false;
  /// deg h <= 2 (p^(n-1) - 1) <= q - 1.
  bool degree_bound_ok = false;
  DensePoly h;
};

/// Builds (sum_j alpha_j x^(p^(n-1) - p^j)) * (sum_j beta_j x^(p^j - 1)) and
/// checks that it equals x^(p^(n-1) - 1) coefficient by coefficient.
/// Throws ContextMismatch.
HIdentityResult h_identity_check(const LinPoly& alpha, const LinPoly& beta);

}  // namespace dirlab
