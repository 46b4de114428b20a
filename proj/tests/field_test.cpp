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

#include "dirlab/error.hpp"
#include "dirlab/field.hpp"
#include "dirlab/mulset.hpp"
#include "oracle.hpp"

namespace dirlab {
namespace {

std::vector<Elem> codes_of(const MulSet& s) { return s.elements(); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no dirlab::Error thrown";
  return ErrorKind::ParseError;
}

TEST(BuildField, DefaultModulusIsFirstIrreducible) {
  EXPECT_EQ(build_field(3, 2)->resolved_spec().modulus, (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(build_field(2, 3)->resolved_spec().modulus, (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_EQ(build_field(2, 2)->resolved_spec().modulus, (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(build_field(2, 4)->resolved_spec().modulus, (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
  EXPECT_EQ(build_field(5, 1)->resolved_spec().modulus, (std::vector<std::uint32_t>{0, 1}));
}

TEST(BuildField, RejectsBadSpecs) {
  EXPECT_EQ(kind_of([] { build_field(4, 1); }), ErrorKind::NonPrimeCharacteristic);
  EXPECT_EQ(kind_of([] { build_field(1, 1); }), ErrorKind::NonPrimeCharacteristic);
  EXPECT_EQ(kind_of([] { build_field(3, 0); }), ErrorKind::DegreeMismatch);
  EXPECT_EQ(kind_of([] { build_field(FieldSpec{3, 2, std::vector<std::uint32_t>{1, 0, 0, 1}}); }),
            ErrorKind::DegreeMismatch);
  // x^2 + 2 = x^2 - 1 = (x-1)(x+1) over F_3
  EXPECT_EQ(kind_of([] { build_field(FieldSpec{3, 2, std::vector<std::uint32_t>{2, 0, 1}}); }),
            ErrorKind::ReducibleModulus);
  EXPECT_EQ(kind_of([] { build_field(FieldSpec{3, 2, std::vector<std::uint32_t>{1, 0, 2}}); }),
            ErrorKind::InvalidModulus);
  EXPECT_EQ(kind_of([] { build_field(2, 21); }), ErrorKind::FieldTooLarge);
}

TEST(BuildField, ExplicitModulus) {
  // x^2 + x + 2 is irreducible over F_3
  auto f = build_field(FieldSpec{3, 2, std::vector<std::uint32_t>{2, 1, 1}});
  oracle::NaiveField naive(*f);
  for (Elem a = 0; a < 9; ++a)
    for (Elem b = 0; b < 9; ++b) EXPECT_EQ(f->mul(a, b), naive.mul(a, b));
}

TEST(BuildField, GeneratorIsSmallestPrimitive) {
  EXPECT_EQ(build_field(3, 2)->generator(), 4u);
  EXPECT_EQ(build_field(2, 4)->generator(), 2u);
  EXPECT_EQ(build_field(13, 1)->generator(), 2u);
  EXPECT_EQ(build_field(7, 1)->generator(), 3u);
  EXPECT_EQ(build_field(2, 1)->generator(), 1u);
}

TEST(BuildField, Deterministic) {
  for (auto [p, n] : {std::pair{2u, 6u}, {3u, 3u}, {5u, 2u}, {11u, 1u}}) {
    auto a = build_field(p, n), b = build_field(p, n);
    EXPECT_TRUE(std::ranges::equal(a->log_table(), b->log_table()));
    EXPECT_TRUE(std::ranges::equal(a->antilog_table(), b->antilog_table()));
    EXPECT_EQ(a->generator(), b->generator());
  }
}

TEST(Arith, Examples) {
  auto f5 = build_field(5, 1);
  EXPECT_EQ(f5->mul(2, 4), 3u);
  auto f9 = build_field(3, 2);
  EXPECT_EQ(f9->mul(3, 3), 2u);
  auto f7 = build_field(7, 1);
  EXPECT_EQ(f7->inv(3), 5u);
  EXPECT_EQ(f7->pow(3, -1), 5u);
  EXPECT_EQ(f7->pow(3, 6), 1u);
  EXPECT_EQ(f7->pow(0, 0), 1u);
  EXPECT_EQ(f7->pow(0, 5), 0u);
  EXPECT_EQ(kind_of([&] { f7->inv(0); }), ErrorKind::DivisionByZero);
  EXPECT_EQ(kind_of([&] { f7->div(1, 0); }), ErrorKind::DivisionByZero);
  EXPECT_EQ(kind_of([&] { f7->pow(0, -2); }), ErrorKind::DivisionByZero);
}

// Every field with q <= 64 against schoolbook arithmetic.
TEST(Arith, MatchesNaiveOracle) {
  for (auto [p, n] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 3u}, {2u, 4u}, {2u, 5u}, {2u, 6u}, {3u, 1u}, {3u, 2u},
                      {3u, 3u}, {5u, 1u}, {5u, 2u}, {7u, 1u}, {7u, 2u}, {11u, 1u}, {13u, 1u}}) {
    auto f = build_field(p, n);
    oracle::NaiveField naive(*f);
    for (Elem a = 0; a < f->q(); ++a) {
      EXPECT_EQ(f->add(a, f->neg(a)), 0u);
      if (a != 0) EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
      for (Elem b = 0; b < f->q(); ++b) {
        ASSERT_EQ(f->add(a, b), naive.add(a, b)) << p << "^" << n;
        ASSERT_EQ(f->sub(a, b), naive.sub(a, b));
        ASSERT_EQ(f->mul(a, b), naive.mul(a, b));
      }
    }
  }
}

TEST(Arith, LargeFieldUsesDigitAddition) {
  auto f = build_field(3, 7);  // q = 2187, no addition table
  oracle::NaiveField naive(*f);
  for (Elem a = 0; a < f->q(); a += 37)
    for (Elem b = 0; b < f->q(); b += 53) {
      ASSERT_EQ(f->add(a, b), naive.add(a, b));
      ASSERT_EQ(f->mul(a, b), naive.mul(a, b));
    }
}

TEST(Tables, LogAntilogBijection) {
  for (auto [p, n] : {std::pair{2u, 4u}, {3u, 2u}, {5u, 2u}, {2u, 8u}}) {
    auto f = build_field(p, n);
    const std::uint32_t m = f->group_order();
    for (Elem e = 1; e < f->q(); ++e) EXPECT_EQ(f->antilog(f->log(e)), e);
    for (std::uint32_t k = 0; k < m; ++k) EXPECT_EQ(f->log(f->antilog(k)), k);
    for (std::uint32_t k = 0; k < m; k += 3)
      for (std::uint32_t j = 0; j < m; j += 5) EXPECT_EQ(f->mul(f->antilog(k), f->antilog(j)), f->antilog((k + j) % m));
  }
}

TEST(Frobenius, Examples) {
  auto f9 = build_field(3, 2);
  EXPECT_EQ(f9->frobenius(5, 1), 8u);
  for (Elem e = 0; e < 9; ++e) EXPECT_EQ(f9->frobenius(e, 0), e);
  EXPECT_EQ(kind_of([&] { f9->frobenius(1, 2); }), ErrorKind::JOutOfRange);

  auto f8 = build_field(2, 3);
  for (Elem e = 0; e < 8; ++e) EXPECT_EQ(f8->frobenius(f8->frobenius(e, 1), 1), f8->frobenius(e, 2));
}

TEST(Frobenius, AdditiveAndMultiplicativeUpTo64) {
  for (auto [p, n] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {2u, 5u}, {2u, 6u}, {3u, 2u}, {3u, 3u}, {5u, 2u},
                      {7u, 2u}}) {
    auto f = build_field(p, n);
    oracle::NaiveField naive(*f);
    std::uint64_t pj = 1;
    for (std::uint32_t j = 0; j < n; ++j, pj *= p) {
      for (Elem x = 0; x < f->q(); ++x) {
        ASSERT_EQ(f->frobenius(x, j), naive.pow(x, pj));
        for (Elem y = 0; y < f->q(); ++y) {
          ASSERT_EQ(f->frobenius(f->add(x, y), j), f->add(f->frobenius(x, j), f->frobenius(y, j)));
          ASSERT_EQ(f->frobenius(f->mul(x, y), j), f->mul(f->frobenius(x, j), f->frobenius(y, j)));
        }
      }
    }
  }
}

TEST(Subgroups, ByIndex) {
  auto f7 = build_field(7, 1);
  EXPECT_EQ(codes_of(subgroup_by_index(f7, 2)), (std::vector<Elem>{1, 2, 4}));
  auto f9 = build_field(3, 2);
  EXPECT_EQ(codes_of(subgroup_by_index(f9, 2)), (std::vector<Elem>{1, 2, 3, 6}));
  auto f16 = build_field(2, 4);
  EXPECT_EQ(codes_of(subgroup_by_index(f16, 5)), (std::vector<Elem>{1, 6, 7}));
  EXPECT_EQ(subgroup_by_index(f16, 1), MulSet::full(f16));
  EXPECT_EQ(kind_of([&] { subgroup_by_index(f7, 4); }), ErrorKind::IndexDoesNotDivide);
  EXPECT_EQ(kind_of([&] { subgroup_by_index(f7, 0); }), ErrorKind::IndexDoesNotDivide);
}

TEST(Subgroups, AllSubgroups) {
  auto f5 = build_field(5, 1);
  auto subs = all_subgroups(f5);
  ASSERT_EQ(subs.size(), 3u);
  EXPECT_EQ(subs[0].first, 1u);
  EXPECT_EQ(codes_of(subs[0].second), (std::vector<Elem>{1, 2, 3, 4}));
  EXPECT_EQ(subs[1].first, 2u);
  EXPECT_EQ(codes_of(subs[1].second), (std::vector<Elem>{1, 4}));
  EXPECT_EQ(subs[2].first, 4u);
  EXPECT_EQ(codes_of(subs[2].second), (std::vector<Elem>{1}));

  auto f4 = build_field(2, 2);
  auto s4 = all_subgroups(f4);
  ASSERT_EQ(s4.size(), 2u);
  EXPECT_EQ(s4[0].second.size(), 3u);
  EXPECT_EQ(s4[1].second.size(), 1u);

  EXPECT_EQ(all_subgroups(build_field(13, 1)).size(), 6u);
}

TEST(Subgroups, ClosedWithExpectedOrder) {
  for (auto [p, n] : {std::pair{2u, 4u}, {3u, 2u}, {13u, 1u}, {2u, 6u}}) {
    auto f = build_field(p, n);
    oracle::NaiveField naive(*f);
    for (auto& [d, K] : all_subgroups(f)) {
      EXPECT_EQ(K.size() * d, f->group_order());
      EXPECT_TRUE(K.contains(1));
      for (Elem a : K.elements()) {
        EXPECT_TRUE(K.contains(f->inv(a)));
        for (Elem b : K.elements()) EXPECT_TRUE(K.contains(f->mul(a, b)));
      }
      // {x^d : x != 0} computed by repeated multiplication
      std::set<Elem> powers;
      for (Elem x = 1; x < f->q(); ++x) powers.insert(naive.pow(x, d));
      EXPECT_EQ(K.elements(), std::vector<Elem>(powers.begin(), powers.end()));
    }
  }
}

TEST(FieldFile, ParsesThreeLineFormat) {
  auto spec = parse_field_spec("p=3\nn=2\nmodulus=1,0,1\n");
  EXPECT_EQ(spec.p, 3u);
  EXPECT_EQ(spec.n, 2u);
  ASSERT_TRUE(spec.modulus);
  EXPECT_EQ(*spec.modulus, (std::vector<std::uint32_t>{1, 0, 1}));
  auto bare = parse_field_spec("# GF(8)\np = 2\nn = 3\n");
  EXPECT_FALSE(bare.modulus);
  EXPECT_EQ(kind_of([] { parse_field_spec("p=3\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_field_spec("p=x\nn=1\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_field_spec("p=3\nn=1\nq=3\n"); }), ErrorKind::ParseError);
}

}  // namespace
}  // namespace dirlab
