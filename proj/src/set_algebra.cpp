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
#include "dirlab/set_algebra.hpp"

#include <numeric>

#include "dirlab/error.hpp"

namespace dirlab {

namespace {

void require_nonempty(const MulSet& s, const char* what) {
  if (s.empty()) throw Error(ErrorKind::EmptySet, std::string(what) + " must be nonempty");
}

// Bits over exponents of the generator, duplicated once past q-1 and padded
// by a word so any 64-bit window starting below 2(q-1) can be read directly.
std::vector<Bitset::Word> doubled_log_bits(const MulSet& s) {
  const FieldCtx& f = s.field();
  const std::size_t m = f.group_order();
  std::vector<Bitset::Word> out(Bitset::word_count(2 * m) + 1, 0);
  s.bits().for_each([&](std::size_t e) {
    const std::size_t k = f.log_table()[e];
    out[k / 64] |= Bitset::Word{1} << (k % 64);
    out[(k + m) / 64] |= Bitset::Word{1} << ((k + m) % 64);
  });
  return out;
}

// dst |= src rotated by `shift` positions over Z/m.
void rotate_or(Bitset& dst, std::span<const Bitset::Word> doubled, std::size_t shift, std::size_t m) {
  auto words = dst.words();
  const std::size_t base = m - shift;
  for (std::size_t w = 0; w < words.size(); ++w) {
    const std::size_t o = base + 64 * w;
    const std::size_t lo = o / 64, sh = o % 64;
    Bitset::Word v = doubled[lo] >> sh;
    if (sh != 0) v |= doubled[lo + 1] << (64 - sh);
    words[w] |= v;
  }
  dst.trim();
}

MulSet from_log_bits(const FieldPtr& ctx, const Bitset& log_bits) {
  Bitset bits(ctx->q());
  log_bits.for_each([&](std::size_t k) { bits.set(ctx->antilog(k)); });
  return MulSet::from_bits(ctx, std::move(bits));
}

}  // namespace

Rational Rational::reduced(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  const auto g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

int compare(const Rational& lhs, const Rational& rhs) {
  const unsigned __int128 l = static_cast<unsigned __int128>(lhs.num) * rhs.den;
  const unsigned __int128 r = static_cast<unsigned __int128>(rhs.num) * lhs.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

bool cube_bound_holds(const Rational& c, std::uint64_t size_D, std::uint64_t q) {
  using U = unsigned __int128;
  const U lhs = U{2} * c.num * c.num * c.num * size_D;
  const U rhs = U{q + 1} * c.den * c.den * c.den;
  return lhs <= rhs;
}

MulSet product_set(const MulSet& A, const MulSet& B) {
  if (!A.field().same_model(B.field())) throw Error(ErrorKind::ContextMismatch, "sets live over different fields");
  require_nonempty(A, "A");
  require_nonempty(B, "B");
  const FieldPtr& ctx = A.field_ptr();
  const std::size_t m = ctx->group_order();
  const auto doubled = doubled_log_bits(B);
  Bitset acc(m);
  A.bits().for_each([&](std::size_t a) { rotate_or(acc, doubled, ctx->log_table()[a], m); });
  return from_log_bits(ctx, acc);
}

MulSet inverse_set(const MulSet& A) {
  require_nonempty(A, "A");
  const FieldCtx& f = A.field();
  Bitset bits(f.q());
  A.bits().for_each([&](std::size_t a) { bits.set(f.inv(static_cast<Elem>(a))); });
  return MulSet::from_bits(A.field_ptr(), std::move(bits));
}

MulSet triple_quotient(const MulSet& D) {
  require_nonempty(D, "D");
  const MulSet inv = inverse_set(D);
  return product_set(product_set(D, inv), inv);
}

DoublingReport doubling_report(const MulSet& D) {
  require_nonempty(D, "D");
  DoublingReport r;
  r.size_D = D.size();
  r.size_DD = product_set(D, D).size();
  r.size_triple = triple_quotient(D).size();
  r.c = Rational::reduced(r.size_DD, r.size_D);
  const std::uint64_t q = D.field().q();
  r.hypothesis_holds = 2 * r.size_triple <= q + 1;
  r.pr_sufficient_holds = cube_bound_holds(r.c, r.size_D, q);
  return r;
}

MulSet scale_set(Elem a, const MulSet& S) {
  const FieldCtx& f = S.field();
  if (a == 0) throw Error(ErrorKind::InvalidElement, "scale factor must be nonzero");
  f.check(a);
  Bitset bits(f.q());
  S.bits().for_each([&](std::size_t s) { bits.set(f.mul(a, static_cast<Elem>(s))); });
  return MulSet::from_bits(S.field_ptr(), std::move(bits));
}

bool is_subgroup(const MulSet& S) {
  if (S.empty()) return false;
  return product_set(S, S) == S;
}

std::optional<CosetDecomposition> coset_decompose(const MulSet& D) {
  require_nonempty(D, "D");
  MulSet K = product_set(D, inverse_set(D));
  if (K.size() != D.size() || !is_subgroup(K)) return std::nullopt;
  const std::uint32_t order = D.field().group_order();
  const auto size = static_cast<std::uint32_t>(K.size());
  if (order % size != 0) return std::nullopt;
  const Elem a = D.elements().front();
  if (!(scale_set(a, K) == D)) return std::nullopt;
  return CosetDecomposition{a, std::move(K), order / size};
}

}  // namespace dirlab
