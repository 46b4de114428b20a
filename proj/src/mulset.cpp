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
#include "dirlab/mulset.hpp"

#include "dirlab/error.hpp"

namespace dirlab {

MulSet::MulSet(FieldPtr ctx) : ctx_(std::move(ctx)), bits_(ctx_->q()) {}

MulSet MulSet::from_codes(FieldPtr ctx, std::span<const Elem> codes) {
  Bitset bits(ctx->q());
  for (Elem e : codes) {
    ctx->check(e);
    if (e == 0) throw Error(ErrorKind::InvalidElement, "0 is not in the multiplicative group");
    bits.set(e);
  }
  return MulSet(std::move(ctx), std::move(bits));
}

MulSet MulSet::from_bits(FieldPtr ctx, Bitset bits) {
  if (bits.size() != ctx->q()) throw Error(ErrorKind::ContextMismatch, "bitset length differs from q");
  if (bits.size() > 0 && bits.test(0)) throw Error(ErrorKind::InvalidElement, "0 is not in the multiplicative group");
  return MulSet(std::move(ctx), std::move(bits));
}

MulSet MulSet::full(FieldPtr ctx) {
  Bitset bits(ctx->q());
  bits.set_all();
  bits.reset(0);
  return MulSet(std::move(ctx), std::move(bits));
}

std::vector<std::uint32_t> divisors(std::uint32_t v) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d <= v; ++d)
    if (v % d == 0) out.push_back(d);
  return out;
}

MulSet subgroup_by_index(const FieldPtr& ctx, std::uint32_t d) {
  const std::uint32_t order = ctx->group_order();
  if (d == 0 || order % d != 0)
    throw Error(ErrorKind::IndexDoesNotDivide,
                "index " + std::to_string(d) + " does not divide q-1=" + std::to_string(order));
  Bitset bits(ctx->q());
  for (std::uint32_t k = 0; k < order; k += d) bits.set(ctx->antilog(k));
  return MulSet::from_bits(ctx, std::move(bits));
}

std::vector<std::pair<std::uint32_t, MulSet>> all_subgroups(const FieldPtr& ctx) {
  std::vector<std::pair<std::uint32_t, MulSet>> out;
  for (auto d : divisors(ctx->group_order())) out.emplace_back(d, subgroup_by_index(ctx, d));
  return out;
}

}  // namespace dirlab
