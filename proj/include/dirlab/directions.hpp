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

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "dirlab/bitset.hpp"
#include "dirlab/field.hpp"
#include "dirlab/mulset.hpp"

namespace dirlab {

/// A total function F_q -> F_q as a dense table; values[x] = f(x).
class FuncTable {
 public:
  /// Throws InvalidTable when values.size() != q or an entry is not a code.
  FuncTable(FieldPtr ctx, std::vector<Elem> values);

  static FuncTable from_fn(FieldPtr ctx, const std::function<Elem(Elem)>& fn);
  static FuncTable identity(FieldPtr ctx);

  const FieldCtx& field() const noexcept { return *ctx_; }
  const FieldPtr& field_ptr() const noexcept { return ctx_; }
  Elem operator()(Elem x) const { return values_[x]; }
  const std::vector<Elem>& values() const noexcept { return values_; }

  /// Same table shifted so that f(0) = 0.
  FuncTable normalized() const;

  friend bool operator==(const FuncTable& a, const FuncTable& b) {
    return a.ctx_->same_model(*b.ctx_) && a.values_ == b.values_;
  }
  friend bool operator<(const FuncTable& a, const FuncTable& b) { return a.values_ < b.values_; }

 private:
  FieldPtr ctx_;
  std::vector<Elem> values_;
};

struct Point {
  Elem x = 0;
  Elem y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct PointSet {
  FieldPtr ctx;
  std::vector<Point> points;
};

/// Finite slopes as a bitset over codes plus a flag for the vertical direction.
class DirectionSet {
 public:
  explicit DirectionSet(FieldPtr ctx) : ctx_(std::move(ctx)), finite_(ctx_->q()) {}

  const FieldCtx& field() const noexcept { return *ctx_; }
  const FieldPtr& field_ptr() const noexcept { return ctx_; }
  const Bitset& finite() const noexcept { return finite_; }
  Bitset& finite() noexcept { return finite_; }
  bool has_infinity() const noexcept { return infinity_; }
  void set_infinity(bool v) noexcept { infinity_ = v; }

  /// Number of directions, counting the vertical one.
  std::size_t size() const noexcept { return finite_.count() + (infinity_ ? 1 : 0); }
  bool contains(Elem e) const noexcept { return e < finite_.size() && finite_.test(e); }
  std::vector<Elem> finite_elements() const { return finite_.to_vector(); }

  /// The directions as a MulSet, when they avoid 0 and infinity.
  std::optional<MulSet> as_mul_set() const;
  /// Every direction is finite and lies in D.
  bool is_subset_of(const MulSet& D) const { return !infinity_ && finite_.is_subset_of(D.bits()); }

  friend bool operator==(const DirectionSet& a, const DirectionSet& b) {
    return a.ctx_->same_model(*b.ctx_) && a.infinity_ == b.infinity_ && a.finite_ == b.finite_;
  }

 private:
  FieldPtr ctx_;
  Bitset finite_;
  bool infinity_ = false;
};

/// Slopes of all pairs of U, with infinity for pairs sharing an x-coordinate.
/// Throws TooFewPoints or DuplicatePoint.
DirectionSet directions_of_points(const PointSet& U);

/// Directions determined by the graph of f. Never contains infinity.
DirectionSet directions_of_function(const FuncTable& f);

/// {f(x)/x : x != 0}. Throws NonzeroAtOrigin when f(0) != 0.
DirectionSet image_ratio_set(const FuncTable& f);

/// Number of graph directions, stopping once the count exceeds `limit`.
/// Returns a value > limit in that case.
std::size_t count_directions_bounded(const FuncTable& f, std::size_t limit);

}  // namespace dirlab
