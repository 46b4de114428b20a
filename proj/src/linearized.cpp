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
#include "dirlab/linearized.hpp"

#include "dirlab/error.hpp"

namespace dirlab {

LinPoly::LinPoly(FieldPtr c, std::vector<Elem> cs) : ctx(std::move(c)), coeffs(std::move(cs)) {
  if (coeffs.size() != ctx->n())
    throw Error(ErrorKind::InvalidTable, "linearized polynomial needs exactly n coefficients");
  for (Elem e : coeffs) ctx->check(e);
}

LinPoly LinPoly::monomial(FieldPtr ctx, Elem a, std::uint32_t j) {
  if (j >= ctx->n()) throw Error(ErrorKind::JOutOfRange, "j=" + std::to_string(j));
  std::vector<Elem> cs(ctx->n(), 0);
  cs[j] = a;
  return LinPoly(std::move(ctx), std::move(cs));
}

std::size_t LinPoly::weight() const {
  std::size_t w = 0;
  for (Elem c : coeffs) w += c != 0;
  return w;
}

DensePoly::DensePoly(FieldPtr c, std::vector<Elem> cs) : ctx(std::move(c)), coeffs(std::move(cs)) {
  for (Elem e : coeffs) ctx->check(e);
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

DensePoly DensePoly::monomial(FieldPtr ctx, Elem c, std::size_t k) {
  std::vector<Elem> cs(k + 1, 0);
  cs[k] = c;
  return DensePoly(std::move(ctx), std::move(cs));
}

Elem lin_eval(const LinPoly& L, Elem x) {
  const FieldCtx& f = *L.ctx;
  Elem acc = 0;
  for (std::uint32_t j = 0; j < L.coeffs.size(); ++j) {
    if (L.coeffs[j] == 0) continue;
    acc = f.add(acc, f.mul(L.coeffs[j], f.frobenius(x, j)));
  }
  return acc;
}

FuncTable to_table(const LinPoly& L) {
  return FuncTable::from_fn(L.ctx, [&](Elem x) { return lin_eval(L, x); });
}

FuncTable to_table(const FieldPtr& ctx, const FrobeniusMonomial& m) {
  const FieldCtx& f = *ctx;
  return FuncTable::from_fn(ctx, [&](Elem x) { return f.add(f.mul(m.a, f.frobenius(x, m.j)), m.b); });
}

bool is_additive(const FuncTable& fn) {
  const FieldCtx& f = fn.field();
  if (fn(0) != 0) return false;
  for (Elem x = 1; x < f.q(); ++x)
    for (Elem y = x; y < f.q(); ++y)
      if (fn(f.add(x, y)) != f.add(fn(x), fn(y))) return false;
  return true;
}

std::optional<LinPoly> detect_linearized(const FuncTable& fn) {
  if (!is_additive(fn)) return std::nullopt;
  const FieldCtx& f = fn.field();
  const std::uint32_t n = f.n();

  // Moore system: sum_j alpha_j * e_i^(p^j) = f(e_i) on the basis e_i = x^i.
  std::vector<std::vector<Elem>> m(n, std::vector<Elem>(n + 1));
  Elem basis = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) m[i][j] = f.frobenius(basis, j);
    m[i][n] = fn(basis);
    basis *= f.p();
  }
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;  // Moore matrix of a basis is nonsingular
    std::swap(m[pivot], m[col]);
    const Elem inv = f.inv(m[col][col]);
    for (auto& v : m[col]) v = f.mul(v, inv);
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Elem factor = m[r][col];
      for (std::uint32_t c = col; c <= n; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[col][c]));
    }
  }
  std::vector<Elem> coeffs(n);
  for (std::uint32_t j = 0; j < n; ++j) coeffs[j] = m[j][n];
  LinPoly L(fn.field_ptr(), std::move(coeffs));
  for (Elem x = 0; x < f.q(); ++x)
    if (lin_eval(L, x) != fn(x)) return std::nullopt;
  return L;
}

std::optional<FrobeniusMonomial> detect_frobenius_monomial(const FuncTable& fn) {
  const FieldCtx& f = fn.field();
  if (f.q() < 2) return std::nullopt;
  const Elem b = fn(0);
  const Elem a = f.sub(fn(1), b);
  if (a == 0) return std::nullopt;
  for (std::uint32_t j = 0; j < f.n(); ++j) {
    bool match = true;
    for (Elem x = 2; x < f.q() && match; ++x) match = fn(x) == f.add(f.mul(a, f.frobenius(x, j)), b);
    if (match) return FrobeniusMonomial{a, j, b};
  }
  return std::nullopt;
}

FuncTable reciprocal_transform(const FuncTable& fn) {
  const FieldCtx& f = fn.field();
  if (fn(0) != 0) throw Error(ErrorKind::NonzeroAtOrigin, "f(0) must be 0");
  std::vector<Elem> g(f.q(), 0);
  for (Elem x = 1; x < f.q(); ++x) {
    const Elem v = fn(f.inv(x));
    if (v == 0)
      throw Error(ErrorKind::ZeroValueAtNonzeroPoint, "f vanishes at nonzero point " + std::to_string(f.inv(x)));
    g[x] = f.inv(v);
  }
  return FuncTable(fn.field_ptr(), std::move(g));
}

DensePoly poly_mul(const DensePoly& A, const DensePoly& B) {
  if (!A.ctx->same_model(*B.ctx)) throw Error(ErrorKind::ContextMismatch, "polynomials over different fields");
  if (A.is_zero() || B.is_zero()) return DensePoly(A.ctx, {});
  const FieldCtx& f = *A.ctx;
  // The factors built by h_identity_check have at most n nonzero terms, so
  // iterate over nonzero coefficients only.
  std::vector<std::size_t> nz_b;
  for (std::size_t j = 0; j < B.coeffs.size(); ++j)
    if (B.coeffs[j] != 0) nz_b.push_back(j);
  std::vector<Elem> out(A.coeffs.size() + B.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < A.coeffs.size(); ++i) {
    if (A.coeffs[i] == 0) continue;
    for (std::size_t j : nz_b) out[i + j] = f.add(out[i + j], f.mul(A.coeffs[i], B.coeffs[j]));
  }
  return DensePoly(A.ctx, std::move(out));
}

HIdentityResult h_identity_check(const LinPoly& alpha, const LinPoly& beta) {
  if (!alpha.ctx->same_model(*beta.ctx)) throw Error(ErrorKind::ContextMismatch, "alpha and beta over different fields");
  const FieldPtr& ctx = alpha.ctx;
  const std::uint32_t n = ctx->n();
  std::vector<std::uint64_t> pj(n);
  pj[0] = 1;
  for (std::uint32_t j = 1; j < n; ++j) pj[j] = pj[j - 1] * ctx->p();
  const std::uint64_t top = pj[n - 1];  // p^(n-1)

  std::vector<Elem> left(top, 0), right(top, 0);
  for (std::uint32_t j = 0; j < n; ++j) {
    left[top - pj[j]] = alpha.coeffs[j];
    right[pj[j] - 1] = beta.coeffs[j];
  }
  DensePoly h = poly_mul(DensePoly(ctx, std::move(left)), DensePoly(ctx, std::move(right)));

  HIdentityResult res{false, false, h};
  const long bound = 2 * (static_cast<long>(top) - 1);
  res.degree_bound_ok = h.degree() <= bound && bound <= static_cast<long>(ctx->q()) - 1;
  res.holds = res.degree_bound_ok && h == DensePoly::monomial(ctx, 1, top - 1);
  return res;
}

}  // namespace dirlab
