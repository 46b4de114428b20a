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
#include <gtest/gtest.h>

#include <functional>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "dirlab/error.hpp"
#include "dirlab/linearized.hpp"

namespace dirlab {
namespace {

void for_each_lin_poly(const FieldPtr& f, const std::function<void(const LinPoly&)>& fn) {
  std::vector<Elem> coeffs(f->n(), 0);
  for (;;) {
    fn(LinPoly(f, coeffs));
    std::size_t i = 0;
    while (i < coeffs.size() && ++coeffs[i] == f->q()) coeffs[i++] = 0;
    if (i == coeffs.size()) return;
  }
}

TEST(LinEval, Examples) {
  auto f9 = build_field(3, 2);
  EXPECT_EQ(lin_eval(LinPoly(f9, {0, 1}), 5), 8u);
  for (Elem x = 0; x < 9; ++x) EXPECT_EQ(lin_eval(LinPoly(f9, {1, 0}), x), x);
  EXPECT_EQ(lin_eval(LinPoly(f9, {4, 7}), 0), 0u);
  EXPECT_THROW(LinPoly(f9, {1}), Error);
  EXPECT_THROW(LinPoly::monomial(f9, 1, 2), Error);
  EXPECT_EQ(LinPoly(f9, {4, 0}).weight(), 1u);
}

TEST(DetectLinearized, Examples) {
  auto f9 = build_field(3, 2);
  auto cube = FuncTable::from_fn(f9, [&](Elem x) { return f9->pow(x, 3); });
  auto L = detect_linearized(cube);
  ASSERT_TRUE(L);
  EXPECT_EQ(L->coeffs, (std::vector<Elem>{0, 1}));

  auto f5 = build_field(5, 1);
  EXPECT_FALSE(detect_linearized(FuncTable::from_fn(f5, [&](Elem x) { return f5->add(x, 1); })));
  EXPECT_FALSE(detect_linearized(FuncTable::from_fn(f5, [&](Elem x) { return f5->mul(x, x); })));

  auto f4 = build_field(2, 2);
  auto t = to_table(LinPoly(f4, {1, 1}));
  EXPECT_EQ(t.values(), (std::vector<Elem>{0, 0, 1, 1}));
  auto back = detect_linearized(t);
  ASSERT_TRUE(back);
  EXPECT_EQ(back->coeffs, (std::vector<Elem>{1, 1}));

  auto zero = detect_linearized(FuncTable(f4, {0, 0, 0, 0}));
  ASSERT_TRUE(zero);
  EXPECT_EQ(zero->weight(), 0u);
}

TEST(DetectLinearized, RoundTripAllPolynomials) {
  for (auto [p, n] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}}) {
    auto f = build_field(p, n);
    std::size_t count = 0;
    for_each_lin_poly(f, [&](const LinPoly& L) {
      auto t = to_table(L);
      EXPECT_TRUE(is_additive(t));
      auto back = detect_linearized(t);
      ASSERT_TRUE(back);
      EXPECT_EQ(*back, L);
      ++count;
    });
    EXPECT_EQ(count, static_cast<std::size_t>(std::pow(f->q(), n)));
  }
}

TEST(DetectFrobeniusMonomial, Examples) {
  auto f5 = build_field(5, 1);
  auto m = detect_frobenius_monomial(FuncTable::from_fn(f5, [&](Elem x) { return f5->add(f5->mul(3, x), 2); }));
  ASSERT_TRUE(m);
  EXPECT_EQ(*m, (FrobeniusMonomial{3, 0, 2}));

  auto f9 = build_field(3, 2);
  auto c = detect_frobenius_monomial(FuncTable::from_fn(f9, [&](Elem x) { return f9->pow(x, 3); }));
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (FrobeniusMonomial{1, 1, 0}));

  auto sq = FuncTable::from_fn(f5, [&](Elem x) { return f5->mul(x, x); });
  EXPECT_EQ(sq.values(), (std::vector<Elem>{0, 1, 4, 4, 1}));
  EXPECT_FALSE(detect_frobenius_monomial(sq));

  // Over a prime field every j collapses to 0, so the smallest exponent wins.
  EXPECT_EQ(detect_frobenius_monomial(FuncTable::identity(f9))->j, 0u);
}

TEST(DetectFrobeniusMonomial, RoundTripAndDirectionCount) {
  for (auto [p, n] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 4u}}) {
    auto f = build_field(p, n);
    for (Elem a = 1; a < f->q(); ++a) {
      for (std::uint32_t j = 0; j < n; ++j) {
        for (Elem b : {Elem{0}, Elem{1}}) {
          auto t = to_table(f, FrobeniusMonomial{a, j, b});
          auto m = detect_frobenius_monomial(t);
          ASSERT_TRUE(m);
          EXPECT_EQ(to_table(f, *m), t);
          EXPECT_LE(m->j, j);
          std::uint64_t pj = 1;
          for (std::uint32_t i = 0; i < m->j; ++i) pj *= p;
          EXPECT_EQ(directions_of_function(t).size(), (f->q() - 1) / std::gcd(pj - 1, f->q() - 1));
        }
      }
    }
  }
}

TEST(ReciprocalTransform, Examples) {
  auto f5 = build_field(5, 1);
  auto g = reciprocal_transform(FuncTable::from_fn(f5, [&](Elem x) { return f5->mul(2, x); }));
  EXPECT_EQ(g, FuncTable::from_fn(f5, [&](Elem x) { return f5->mul(3, x); }));

  auto f8 = build_field(2, 3);
  EXPECT_EQ(reciprocal_transform(FuncTable::identity(f8)), FuncTable::identity(f8));

  auto f9 = build_field(3, 2);
  for (Elem gamma = 1; gamma < 9; ++gamma) {
    auto f = to_table(f9, FrobeniusMonomial{f9->inv(gamma), 1, 0});
    EXPECT_EQ(reciprocal_transform(f), to_table(f9, FrobeniusMonomial{gamma, 1, 0}));
  }

  try {
    reciprocal_transform(FuncTable(f5, {0, 1, 0, 3, 4}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroValueAtNonzeroPoint);
  }
  EXPECT_THROW(reciprocal_transform(FuncTable(f5, {1, 1, 2, 3, 4})), Error);
}

TEST(ReciprocalTransform, InvolutionOnPermutations) {
  auto f = build_field(7, 1);
  std::vector<Elem> perm{1, 2, 3, 4, 5, 6};
  do {
    std::vector<Elem> v{0};
    v.insert(v.end(), perm.begin(), perm.end());
    FuncTable t(f, v);
    EXPECT_EQ(reciprocal_transform(reciprocal_transform(t)), t);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(PolyMul, Examples) {
  auto f2 = build_field(2, 1);
  EXPECT_EQ(poly_mul(DensePoly(f2, {1, 1}), DensePoly(f2, {1, 1})).coeffs, (std::vector<Elem>{1, 0, 1}));
  auto f5 = build_field(5, 1);
  EXPECT_EQ(poly_mul(DensePoly(f5, {2, 1}), DensePoly(f5, {3, 1})).coeffs, (std::vector<Elem>{1, 0, 1}));
  DensePoly B(f5, {4, 0, 3, 1});
  EXPECT_EQ(poly_mul(DensePoly(f5, {1}), B), B);
  EXPECT_TRUE(poly_mul(DensePoly(f5, {}), B).is_zero());
  EXPECT_EQ(DensePoly(f5, {1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(DensePoly(f5, {}).degree(), -1);
  auto f7 = build_field(7, 1);
  EXPECT_THROW(poly_mul(DensePoly(f5, {1}), DensePoly(f7, {1})), Error);
}

TEST(HIdentity, MonomialPairsHold) {
  for (auto [p, n] : {std::pair{3u, 2u}, {2u, 3u}, {2u, 4u}, {5u, 1u}}) {
    auto f = build_field(p, n);
    for (Elem gamma = 1; gamma < f->q(); ++gamma) {
      for (std::uint32_t j = 0; j < n; ++j) {
        auto r = h_identity_check(LinPoly::monomial(f, f->inv(gamma), j), LinPoly::monomial(f, gamma, j));
        EXPECT_TRUE(r.holds);
        EXPECT_TRUE(r.degree_bound_ok);
      }
    }
  }
}

TEST(HIdentity, IdentityPipelineAndFailingPair) {
  auto f9 = build_field(3, 2);
  auto id = FuncTable::identity(f9);
  auto alpha = detect_linearized(id);
  auto beta = detect_linearized(reciprocal_transform(id));
  ASSERT_TRUE(alpha && beta);
  auto ok = h_identity_check(*alpha, *beta);
  EXPECT_TRUE(ok.holds);
  EXPECT_EQ(ok.h, DensePoly::monomial(f9, 1, 2));

  // x + x^3 against the identity's beta with beta_0 perturbed from 1 to 2.
  auto bad = h_identity_check(LinPoly(f9, {1, 1}), LinPoly(f9, {2, 0}));
  EXPECT_FALSE(bad.holds);
  ASSERT_EQ(bad.h.degree(), 2);
  EXPECT_EQ(bad.h.coeffs[0], 2u);
  EXPECT_EQ(bad.h.coeffs[2], 2u);

  auto f4 = build_field(2, 2);
  EXPECT_THROW(h_identity_check(LinPoly(f9, {1, 0}), LinPoly(f4, {1, 0})), Error);
}

TEST(HIdentity, HoldsOnlyForMonomialBeta) {
  auto f = build_field(2, 3);
  for_each_lin_poly(f, [&](const LinPoly& alpha) {
    if (alpha.weight() == 0) return;
    for_each_lin_poly(f, [&](const LinPoly& beta) {
      if (h_identity_check(alpha, beta).holds) EXPECT_EQ(beta.weight(), 1u);
    });
  });
}

TEST(HIdentity, PrimeFieldReducesToUnitProduct) {
  auto f7 = build_field(7, 1);
  EXPECT_TRUE(h_identity_check(LinPoly(f7, {3}), LinPoly(f7, {5})).holds);
  EXPECT_FALSE(h_identity_check(LinPoly(f7, {3}), LinPoly(f7, {4})).holds);
}

}  // namespace
}  // namespace dirlab
