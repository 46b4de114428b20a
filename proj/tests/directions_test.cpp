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

#include <random>

#include "dirlab/directions.hpp"
#include "dirlab/error.hpp"
#include "dirlab/linearized.hpp"
#include "dirlab/search.hpp"
#include "oracle.hpp"

namespace dirlab {
namespace {

FuncTable random_table(const FieldPtr& f, std::mt19937_64& rng) {
  std::vector<Elem> v(f->q());
  for (auto& e : v) e = static_cast<Elem>(rng() % f->q());
  return FuncTable(f, v);
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ParseError;
}

TEST(FuncTable, Validation) {
  auto f4 = build_field(2, 2);
  EXPECT_EQ(kind_of([&] { FuncTable(f4, {0, 1, 2}); }), ErrorKind::InvalidTable);
  EXPECT_EQ(kind_of([&] { FuncTable(f4, {0, 1, 2, 4}); }), ErrorKind::InvalidTable);
  FuncTable t(f4, {2, 3, 0, 1});
  EXPECT_EQ(t.normalized().values(), (std::vector<Elem>{0, 1, 2, 3}));
  EXPECT_EQ(t.normalized(), FuncTable::identity(f4));
}

TEST(DirectionsOfFunction, Examples) {
  auto f4 = build_field(2, 2);
  auto sq = FuncTable::from_fn(f4, [&](Elem x) { return f4->mul(x, x); });
  EXPECT_EQ(sq.values(), (std::vector<Elem>{0, 1, 3, 2}));
  auto d = directions_of_function(sq);
  EXPECT_EQ(d.finite_elements(), (std::vector<Elem>{1, 2, 3}));
  EXPECT_FALSE(d.has_infinity());
  EXPECT_EQ(d.size(), 3u);

  auto f5 = build_field(5, 1);
  auto sq5 = FuncTable::from_fn(f5, [&](Elem x) { return f5->mul(x, x); });
  EXPECT_EQ(directions_of_function(sq5).finite_elements(), (std::vector<Elem>{0, 1, 2, 3, 4}));

  auto c = directions_of_function(FuncTable(f4, {0, 1, 1, 1}));
  EXPECT_EQ(c.finite_elements(), (std::vector<Elem>{0, 1, 2, 3}));
  EXPECT_FALSE(c.as_mul_set());

  auto id = directions_of_function(FuncTable::identity(f5));
  EXPECT_EQ(id.finite_elements(), (std::vector<Elem>{1}));
  ASSERT_TRUE(id.as_mul_set());
  EXPECT_EQ(id.as_mul_set()->elements(), (std::vector<Elem>{1}));
}

TEST(DirectionsOfFunction, MatchesPairwiseOracle) {
  std::mt19937_64 rng(21);
  for (auto [p, n] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 4u}, {7u, 1u}, {5u, 2u}}) {
    auto f = build_field(p, n);
    oracle::NaiveField naive(*f);
    for (int trial = 0; trial < 20; ++trial) {
      auto t = random_table(f, rng);
      auto expect = oracle::pairwise_directions(naive, t.values());
      auto got = directions_of_function(t).finite_elements();
      ASSERT_EQ(std::set<Elem>(got.begin(), got.end()), expect);
      auto bounded = count_directions_bounded(t, f->q());
      EXPECT_EQ(bounded, expect.size());
      if (expect.size() > 2) EXPECT_GT(count_directions_bounded(t, 2), 2u);
    }
  }
}

TEST(DirectionsOfPoints, VerticalAndErrors) {
  auto f5 = build_field(5, 1);
  auto d = directions_of_points(PointSet{f5, {{0, 0}, {1, 1}, {1, 3}}});
  EXPECT_TRUE(d.has_infinity());
  EXPECT_EQ(d.finite_elements(), (std::vector<Elem>{1, 3}));
  EXPECT_EQ(d.size(), 3u);
  EXPECT_FALSE(d.as_mul_set());
  EXPECT_FALSE(d.is_subset_of(MulSet::full(f5)));

  EXPECT_EQ(kind_of([&] { directions_of_points(PointSet{f5, {{0, 0}}}); }), ErrorKind::TooFewPoints);
  EXPECT_EQ(kind_of([&] { directions_of_points(PointSet{f5, {{0, 0}, {2, 2}, {0, 0}}}); }),
            ErrorKind::DuplicatePoint);
  EXPECT_EQ(kind_of([&] { directions_of_points(PointSet{f5, {{0, 0}, {5, 1}}}); }), ErrorKind::InvalidElement);
}

TEST(DirectionsOfPoints, GraphAgreesWithFunction) {
  std::mt19937_64 rng(4);
  auto f = build_field(3, 2);
  for (int trial = 0; trial < 10; ++trial) {
    auto t = random_table(f, rng);
    PointSet U{f, {}};
    for (Elem x = 0; x < f->q(); ++x) U.points.push_back({x, t(x)});
    EXPECT_EQ(directions_of_points(U), directions_of_function(t));
  }
}

TEST(ImageRatioSet, Examples) {
  auto f4 = build_field(2, 2);
  EXPECT_EQ(image_ratio_set(FuncTable(f4, {0, 1, 1, 1})).finite_elements(), (std::vector<Elem>{1, 2, 3}));
  EXPECT_EQ(kind_of([&] { image_ratio_set(FuncTable(f4, {1, 1, 1, 1})); }), ErrorKind::NonzeroAtOrigin);
}

TEST(ImageRatioSet, EqualsDirectionsForLinearized) {
  for (auto [p, n] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {2u, 4u}}) {
    auto f = build_field(p, n);
    std::vector<Elem> coeffs(n, 0);
    for (;;) {
      auto t = to_table(LinPoly(f, coeffs));
      EXPECT_EQ(image_ratio_set(t), directions_of_function(t));
      std::size_t i = 0;
      while (i < n && ++coeffs[i] == f->q()) coeffs[i++] = 0;
      if (i == n) break;
    }
  }
}

TEST(Directions, AffineInvariance) {
  std::mt19937_64 rng(8);
  auto f = build_field(2, 4);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = random_table(f, rng);
    auto base = directions_of_function(t).finite_elements();
    Elem lambda = 1 + static_cast<Elem>(rng() % (f->q() - 1));
    Elem a = static_cast<Elem>(rng() % f->q());
    Elem b = static_cast<Elem>(rng() % f->q());
    Elem s = static_cast<Elem>(rng() % f->q());
    auto g = FuncTable::from_fn(f, [&](Elem x) { return f->add(f->add(f->mul(lambda, t(f->add(x, s))), f->mul(a, x)), b); });
    std::set<Elem> expect;
    for (auto d : base) expect.insert(f->add(f->mul(lambda, d), a));
    auto got = directions_of_function(g).finite_elements();
    EXPECT_EQ(std::set<Elem>(got.begin(), got.end()), expect);
  }
}

TEST(Directions, SingleDirectionIffAffine) {
  for (auto [p, n] : {std::pair{2u, 2u}, {3u, 1u}}) {
    auto f = build_field(p, n);
    const Elem q = f->q();
    std::vector<Elem> v(q, 0);
    for (;;) {
      FuncTable t(f, v);
      bool affine = true;
      Elem a = f->sub(t(1), t(0));
      for (Elem x = 0; x < q; ++x) affine = affine && t(x) == f->add(f->mul(a, x), t(0));
      EXPECT_EQ(directions_of_function(t).size() == 1, affine);
      std::size_t i = 0;
      while (i < q && ++v[i] == q) v[i++] = 0;
      if (i == q) break;
    }
  }
}

TEST(Directions, QuotientConditionBridge) {
  std::mt19937_64 rng(12);
  auto f = build_field(7, 1);
  for (int trial = 0; trial < 200; ++trial) {
    auto t = random_table(f, rng);
    auto D = random_mul_set(f, rng);
    EXPECT_EQ(satisfies_quotient_condition(t, D), directions_of_function(t).is_subset_of(D));
  }
  auto id = FuncTable::identity(f);
  EXPECT_TRUE(satisfies_quotient_condition(id, MulSet::from_codes(f, {1})));
}

}  // namespace
}  // namespace dirlab
