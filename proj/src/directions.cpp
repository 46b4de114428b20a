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
#include "dirlab/directions.hpp"

#include "dirlab/error.hpp"

namespace dirlab {

FuncTable::FuncTable(FieldPtr ctx, std::vector<Elem> values) : ctx_(std::move(ctx)), values_(std::move(values)) {
  if (values_.size() != ctx_->q())
    throw Error(ErrorKind::InvalidTable,
                "table has " + std::to_string(values_.size()) + " entries, expected q=" + std::to_string(ctx_->q()));
  for (Elem v : values_)
    if (!ctx_->valid(v)) throw Error(ErrorKind::InvalidTable, "table entry " + std::to_string(v) + " is not a code");
}

FuncTable FuncTable::from_fn(FieldPtr ctx, const std::function<Elem(Elem)>& fn) {
  std::vector<Elem> values(ctx->q());
  for (Elem x = 0; x < ctx->q(); ++x) values[x] = fn(x);
  return FuncTable(std::move(ctx), std::move(values));
}

FuncTable FuncTable::identity(FieldPtr ctx) {
  return from_fn(std::move(ctx), [](Elem x) { return x; });
}

FuncTable FuncTable::normalized() const {
  std::vector<Elem> out(values_.size());
  const Elem b = values_[0];
  for (std::size_t x = 0; x < values_.size(); ++x) out[x] = ctx_->sub(values_[x], b);
  return FuncTable(ctx_, std::move(out));
}

std::optional<MulSet> DirectionSet::as_mul_set() const {
  if (infinity_ || finite_.test(0)) return std::nullopt;
  return MulSet::from_bits(ctx_, finite_);
}

DirectionSet directions_of_points(const PointSet& U) {
  if (U.points.size() < 2) throw Error(ErrorKind::TooFewPoints, "need at least two points");
  const FieldCtx& f = *U.ctx;
  for (const auto& pt : U.points) {
    f.check(pt.x);
    f.check(pt.y);
  }
  DirectionSet out(U.ctx);
  const auto& pts = U.points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j])
        throw Error(ErrorKind::DuplicatePoint,
                    "point (" + std::to_string(pts[i].x) + "," + std::to_string(pts[i].y) + ") repeated");
      if (pts[i].x == pts[j].x) {
        out.set_infinity(true);
        continue;
      }
      out.finite().set(f.div(f.sub(pts[j].y, pts[i].y), f.sub(pts[j].x, pts[i].x)));
    }
  }
  return out;
}

DirectionSet directions_of_function(const FuncTable& fn) {
  const FieldCtx& f = fn.field();
  const std::size_t q = f.q();
  DirectionSet out(fn.field_ptr());
  Bitset& bits = out.finite();
  std::size_t seen = 0;
  for (Elem x = 0; x < q; ++x) {
    for (Elem y = x + 1; y < q; ++y) {
      const Elem d = f.div(f.sub(fn(y), fn(x)), f.sub(y, x));
      if (!bits.test(d)) {
        bits.set(d);
        if (++seen == q) return out;
      }
    }
  }
  return out;
}

std::size_t count_directions_bounded(const FuncTable& fn, std::size_t limit) {
  const FieldCtx& f = fn.field();
  const std::size_t q = f.q();
  Bitset bits(q);
  std::size_t seen = 0;
  for (Elem x = 0; x < q; ++x) {
    for (Elem y = x + 1; y < q; ++y) {
      const Elem d = f.div(f.sub(fn(y), fn(x)), f.sub(y, x));
      if (!bits.test(d)) {
        bits.set(d);
        if (++seen > limit) return seen;
      }
    }
  }
  return seen;
}

DirectionSet image_ratio_set(const FuncTable& fn) {
  if (fn(0) != 0) throw Error(ErrorKind::NonzeroAtOrigin, "f(0) must be 0");
  const FieldCtx& f = fn.field();
  DirectionSet out(fn.field_ptr());
  for (Elem x = 1; x < f.q(); ++x) out.finite().set(f.div(fn(x), x));
  return out;
}

}  // namespace dirlab
