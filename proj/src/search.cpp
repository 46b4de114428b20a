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
#include "dirlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <set>

#include "dirlab/error.hpp"
#include "parallel.hpp"

namespace dirlab {

namespace {

using Word = Bitset::Word;

// Backtracking over f(1), f(2), ... in code order. Level k holds, for every
// x >= k, the values still compatible with all assignments below k:
// f(x) in f(y) + (x - y) D for each assigned y.
class QuotientSearch {
 public:
  QuotientSearch(const MulSet& D, std::uint64_t max_solutions)
      : f_(D.field()), q_(D.field().q()), words_(Bitset::word_count(q_)), max_solutions_(max_solutions) {
    // shifted_[(v * q + r) * words] = bits of v + r D, for r != 0.
    shifted_.assign(static_cast<std::size_t>(q_) * q_ * words_, 0);
    const auto elems = D.elements();
    for (Elem r = 1; r < q_; ++r) {
      std::vector<Elem> scaled;
      scaled.reserve(elems.size());
      for (Elem d : elems) scaled.push_back(f_.mul(r, d));
      for (Elem v = 0; v < q_; ++v) {
        Word* out = shifted(v, r);
        for (Elem s : scaled) {
          const Elem e = f_.add(v, s);
          out[e / 64] |= Word{1} << (e % 64);
        }
      }
    }
  }

  std::vector<Elem> first_choices() const {
    std::vector<Elem> out;
    const Word* d = shifted(0, 1);
    for (Elem v = 0; v < q_; ++v)
      if ((d[v / 64] >> (v % 64)) & 1u) out.push_back(v);
    return out;
  }

  struct Result {
    std::vector<std::vector<Elem>> solutions;
    std::uint64_t nodes = 0;
  };

  // Subtree with f(0) = 0 and f(1) = v1.
  Result run_branch(Elem v1, std::atomic<std::uint64_t>& found) const {
    Branch b{*this, found, {}, {}, {}};
    b.levels.assign(static_cast<std::size_t>(q_ + 1) * q_ * words_, 0);
    b.values.assign(q_, 0);
    for (Elem x = 1; x < q_; ++x) std::copy_n(shifted(0, x), words_, b.slot(1, x));
    b.assign(1, v1);
    return std::move(b.result);
  }

 private:
  struct Branch {
    const QuotientSearch& s;
    std::atomic<std::uint64_t>& found;
    std::vector<Word> levels;
    std::vector<Elem> values;
    Result result;

    Word* slot(std::uint32_t level, Elem x) {
      return levels.data() + (static_cast<std::size_t>(level) * s.q_ + x) * s.words_;
    }

    void descend(std::uint32_t k) {
      const std::size_t W = s.words_;
      const Word* cand = slot(k, k);
      for (std::size_t w = 0; w < W; ++w) {
        Word bits = cand[w];
        while (bits) {
          const auto v = static_cast<Elem>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
          bits &= bits - 1;
          assign(k, v);
        }
      }
    }

    void assign(std::uint32_t k, Elem v) {
      ++result.nodes;
      values[k] = v;
      const std::uint32_t q = s.q_;
      const std::size_t W = s.words_;
      for (Elem x = k + 1; x < q; ++x) {
        const Word* prev = slot(k, x);
        const Word* mask = s.shifted(v, s.f_.sub(x, k));
        Word* next = slot(k + 1, x);
        Word any = 0;
        for (std::size_t w = 0; w < W; ++w) {
          next[w] = prev[w] & mask[w];
          any |= next[w];
        }
        if (!any) return;
      }
      if (k + 1 == q) {
        if (s.max_solutions_ != 0 && found.fetch_add(1) + 1 > s.max_solutions_)
          throw Error(ErrorKind::SearchLimitExceeded,
                      "more than " + std::to_string(s.max_solutions_) + " solutions");
        result.solutions.push_back(values);
        return;
      }
      descend(k + 1);
    }
  };

  Word* shifted(Elem v, Elem r) { return shifted_.data() + (static_cast<std::size_t>(v) * q_ + r) * words_; }
  const Word* shifted(Elem v, Elem r) const {
    return shifted_.data() + (static_cast<std::size_t>(v) * q_ + r) * words_;
  }

  const FieldCtx& f_;
  std::uint32_t q_;
  std::size_t words_;
  std::uint64_t max_solutions_;
  std::vector<Word> shifted_;
};

std::set<std::vector<Elem>> table_set(const std::vector<FuncTable>& tables) {
  std::set<std::vector<Elem>> out;
  for (const auto& t : tables) out.insert(t.values());
  return out;
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

bool is_frobenius_index(std::uint32_t index, std::uint32_t p, std::uint32_t n) {
  for (auto r : divisors(n))
    if (ipow(p, r) - 1 == index) return true;
  return false;
}

}  // namespace

Enumeration enumerate_quotient_functions_counted(const MulSet& D, bool normalize, const SearchOptions& opts) {
  if (D.empty()) throw Error(ErrorKind::EmptySet, "D must be nonempty");
  const FieldPtr& ctx = D.field_ptr();
  if (ctx->q() > kMaxSearchOrder)
    throw Error(ErrorKind::FieldTooLargeForExhaustion,
                "search supports q <= " + std::to_string(kMaxSearchOrder) + ", got q=" + std::to_string(ctx->q()));

  const QuotientSearch search(D, opts.max_solutions);
  const auto firsts = search.first_choices();
  std::vector<QuotientSearch::Result> branches(firsts.size());
  std::atomic<std::uint64_t> found{0};
  detail::parallel_for(firsts.size(), opts.workers,
                       [&](std::size_t i) { branches[i] = search.run_branch(firsts[i], found); });

  Enumeration out;
  for (auto& br : branches) {
    out.node_count += br.nodes;
    for (auto& values : br.solutions) out.solutions.emplace_back(ctx, std::move(values));
  }
  if (!normalize) {
    std::vector<FuncTable> all;
    all.reserve(out.solutions.size() * ctx->q());
    for (const auto& sol : out.solutions) {
      for (Elem b = 0; b < ctx->q(); ++b) {
        std::vector<Elem> shifted(sol.values());
        for (auto& v : shifted) v = ctx->add(v, b);
        all.emplace_back(ctx, std::move(shifted));
      }
    }
    std::sort(all.begin(), all.end());
    out.solutions = std::move(all);
  }
  return out;
}

std::vector<FuncTable> enumerate_quotient_functions(const MulSet& D, bool normalize, const SearchOptions& opts) {
  return enumerate_quotient_functions_counted(D, normalize, opts).solutions;
}

bool satisfies_quotient_condition(const FuncTable& fn, const MulSet& D) {
  const FieldCtx& f = fn.field();
  for (Elem x = 0; x < f.q(); ++x)
    for (Elem y = x + 1; y < f.q(); ++y)
      if (!D.contains(f.div(f.sub(fn(y), fn(x)), f.sub(y, x)))) return false;
  return true;
}

std::vector<FrobeniusMonomial> expected_solution_set(const MulSet& D) {
  if (D.empty()) throw Error(ErrorKind::EmptySet, "D must be nonempty");
  const FieldPtr& ctx = D.field_ptr();
  const std::uint32_t n = ctx->n();
  std::vector<FrobeniusMonomial> out;
  for (std::uint32_t j = 0; j < n; ++j) {
    // The image of x^(p^j - 1) is the subgroup of index gcd(p^j - 1, q - 1) = p^gcd(j, n) - 1.
    const auto index = static_cast<std::uint32_t>(ipow(ctx->p(), std::gcd(j, n)) - 1);
    const MulSet image = subgroup_by_index(ctx, index);
    for (Elem a = 1; a < ctx->q(); ++a)
      if (scale_set(a, image).is_subset_of(D)) out.push_back(FrobeniusMonomial{a, j, 0});
  }
  return out;
}

bool SearchReport::violation() const {
  return (hypothesis.hypothesis_holds && !all_monomial) || !revalidated || !expected_contained ||
         all_monomial != expected_equal;
}

SearchReport verify_mcconnel_extended(const MulSet& D, const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  SearchReport r{.D = D, .hypothesis = doubling_report(D)};
  auto en = enumerate_quotient_functions_counted(D, true, opts);
  r.solutions = std::move(en.solutions);
  r.node_count = en.node_count;
  for (const auto& sol : r.solutions) {
    if (!satisfies_quotient_condition(sol, D)) r.revalidated = false;
    const auto mono = detect_frobenius_monomial(sol);
    if (mono && mono->b == 0)
      r.monomial_forms.push_back(*mono);
    else
      r.all_monomial = false;
  }
  r.expected = expected_solution_set(D);
  std::vector<FuncTable> expected_tables;
  for (const auto& m : r.expected) expected_tables.push_back(to_table(D.field_ptr(), m));
  const auto found = table_set(r.solutions);
  const auto want = table_set(expected_tables);
  r.expected_contained = std::includes(found.begin(), found.end(), want.begin(), want.end());
  r.expected_equal = found == want;
  r.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

DirectionsTheoremReport verify_directions_theorem(const FieldPtr& ctx, unsigned workers) {
  const std::uint32_t q = ctx->q();
  if (q > kMaxDirectionsOrder)
    throw Error(ErrorKind::FieldTooLargeForExhaustion,
                "exhaustive directions check supports q <= " + std::to_string(kMaxDirectionsOrder) +
                    ", got q=" + std::to_string(q));
  const FieldCtx& f = *ctx;
  const std::uint32_t limit = (q + 1) / 2;

  // quot[((x * q + y) * q + fx) * q + fy] = (fy - fx) / (y - x) for x < y.
  std::vector<std::uint8_t> quot(static_cast<std::size_t>(q) * q * q * q, 0);
  for (Elem x = 0; x < q; ++x)
    for (Elem y = x + 1; y < q; ++y)
      for (Elem fx = 0; fx < q; ++fx)
        for (Elem fy = 0; fy < q; ++fy)
          quot[((static_cast<std::size_t>(x) * q + y) * q + fx) * q + fy] =
              static_cast<std::uint8_t>(f.div(f.sub(fy, fx), f.sub(y, x)));
  std::vector<std::uint64_t> subtree(q + 1, 1);  // subtree[k] = q^(q-1-k)
  for (std::uint32_t k = q - 1; k-- > 0;) subtree[k] = subtree[k + 1] * q;

  struct Walker {
    const FieldPtr& ctx;
    const std::vector<std::uint8_t>& quot;
    const std::vector<std::uint64_t>& subtree;
    std::uint32_t q, limit;
    std::vector<Elem> values;
    DirectionsTheoremReport rep;

    void visit(std::uint32_t k, std::uint32_t mask) {
      for (Elem v = 0; v < q; ++v) place(k, v, mask);
    }

    void place(std::uint32_t k, Elem v, std::uint32_t mask) {
      values[k] = v;
      for (Elem x = 0; x < k; ++x)
        mask |= 1u << quot[((static_cast<std::size_t>(x) * q + k) * q + values[x]) * q + v];
      if (static_cast<std::uint32_t>(std::popcount(mask)) > limit) {
        rep.checked += subtree[k];
        return;
      }
      if (k + 1 < q) {
        visit(k + 1, mask);
        return;
      }
      ++rep.checked;
      ++rep.within_bound;
      if (!detect_linearized(FuncTable(ctx, values))) ++rep.violations;
    }
  };

  std::vector<DirectionsTheoremReport> parts(q);
  detail::parallel_for(q, workers, [&](std::size_t i) {
    Walker w{ctx, quot, subtree, q, limit, std::vector<Elem>(q, 0), {}};
    w.place(1, static_cast<Elem>(i), 0);
    parts[i] = w.rep;
  });
  DirectionsTheoremReport total;
  total.q = q;
  for (const auto& p : parts) {
    total.checked += p.checked;
    total.within_bound += p.within_bound;
    total.violations += p.violations;
  }
  return total;
}

CensusReport corollary_census(const FieldPtr& ctx, unsigned workers) {
  const std::uint32_t q = ctx->q();
  const std::uint32_t n = ctx->n();
  const std::uint32_t p = ctx->p();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    total *= q;
    if (total > kMaxCensusPolynomials)
      throw Error(ErrorKind::FieldTooLargeForExhaustion, "census needs q^n <= 10^8");
  }

  struct Part {
    std::map<std::vector<Word>, std::pair<DirectionSet, std::uint64_t>> sets;
    std::map<std::uint64_t, std::uint64_t> sizes;
  };
  const std::uint64_t per_alpha0 = total / q;
  std::vector<Part> parts(q);
  detail::parallel_for(q, workers, [&](std::size_t a0) {
    Part& part = parts[a0];
    std::vector<Elem> coeffs(n, 0);
    coeffs[0] = static_cast<Elem>(a0);
    for (std::uint64_t rest = 0; rest < per_alpha0; ++rest) {
      std::uint64_t code = rest;
      for (std::uint32_t j = 1; j < n; ++j) {
        coeffs[j] = static_cast<Elem>(code % q);
        code /= q;
      }
      const DirectionSet dirs = directions_of_function(to_table(LinPoly(ctx, coeffs)));
      ++part.sizes[dirs.size()];
      std::vector<Word> key(dirs.finite().words().begin(), dirs.finite().words().end());
      auto it = part.sets.find(key);
      if (it == part.sets.end())
        part.sets.emplace(std::move(key), std::make_pair(dirs, std::uint64_t{1}));
      else
        ++it->second.second;
    }
  });

  CensusReport rep;
  rep.field = ctx->resolved_spec();
  rep.polynomials = total;
  std::map<std::vector<Word>, std::pair<DirectionSet, std::uint64_t>> merged;
  for (auto& part : parts) {
    for (auto& [size, count] : part.sizes) rep.size_counts[size] += count;
    for (auto& [key, entry] : part.sets) {
      auto it = merged.find(key);
      if (it == merged.end())
        merged.emplace(key, entry);
      else
        it->second.second += entry.second;
    }
  }

  for (auto& [key, entry] : merged) {
    CensusEntry ce{.directions = entry.first, .multiplicity = entry.second};
    if (auto D = ce.directions.as_mul_set()) {
      ce.in_multiplicative_group = true;
      ce.hypothesis_holds = 2 * triple_quotient(*D).size() <= std::uint64_t{q} + 1;
      ce.coset = coset_decompose(*D);
      if (ce.hypothesis_holds) {
        ++rep.hypothesis_sets;
        if (!ce.coset || !is_frobenius_index(ce.coset->index, p, n)) ++rep.forward_violations;
      }
    }
    rep.classified.push_back(std::move(ce));
  }
  std::sort(rep.classified.begin(), rep.classified.end(), [](const CensusEntry& a, const CensusEntry& b) {
    if (a.directions.size() != b.directions.size()) return a.directions.size() < b.directions.size();
    return a.directions.finite_elements() < b.directions.finite_elements();
  });

  for (auto r : divisors(n)) {
    const auto index = static_cast<std::uint32_t>(ipow(p, r) - 1);
    const MulSet K = subgroup_by_index(ctx, index);
    for (Elem a = 1; a < q; ++a) {
      ++rep.converse_checked;
      // x^(p^n) = x on F_q, so r = n is the j = 0 monomial.
      const auto dirs = directions_of_function(to_table(LinPoly::monomial(ctx, a, r % n)));
      const auto as_set = dirs.as_mul_set();
      if (!as_set || !(*as_set == scale_set(a, K))) ++rep.converse_violations;
    }
  }
  return rep;
}

MulSet random_mul_set(const FieldPtr& ctx, std::mt19937_64& rng) {
  for (;;) {
    Bitset bits(ctx->q());
    for (Elem e = 1; e < ctx->q(); ++e)
      if (rng() & 1u) bits.set(e);
    if (bits.any()) return MulSet::from_bits(ctx, std::move(bits));
  }
}

std::vector<SampleOutcome> small_doubling_sampler(const FieldPtr& ctx, const SamplerParams& params,
                                                  const SearchOptions& opts) {
  const MulSet K = subgroup_by_index(ctx, params.index);
  const bool cosets = params.strategy == SamplerStrategy::CosetUnion;

  auto build = [&](const std::vector<Elem>& picks) {
    Bitset bits = K.bits();
    if (cosets) {
      bits.clear();
      for (Elem rep : picks) bits |= scale_set(rep, K).bits();
    } else {
      for (Elem e : picks) {
        ctx->check(e);
        if (e == 0) throw Error(ErrorKind::InvalidElement, "extra point must be nonzero");
        bits.set(e);
      }
    }
    return MulSet::from_bits(ctx, std::move(bits));
  };

  std::vector<MulSet> candidates;
  for (const auto& picks : params.explicit_sets) {
    if (cosets && picks.empty()) throw Error(ErrorKind::EmptySet, "coset union needs at least one representative");
    candidates.push_back(build(picks));
  }

  if (params.random_count > 0) {
    if (!params.seed) throw Error(ErrorKind::ParseError, "random sampling requires a seed");
    std::vector<Elem> pool;
    if (cosets) {
      for (std::uint32_t i = 0; i < params.index; ++i) pool.push_back(ctx->antilog(i));
    } else {
      for (Elem e = 1; e < ctx->q(); ++e)
        if (!K.contains(e)) pool.push_back(e);
    }
    if (params.random_size == 0 || params.random_size > pool.size())
      throw Error(ErrorKind::ParseError, "random_size must be in [1, " + std::to_string(pool.size()) + "]");
    std::mt19937_64 rng(*params.seed);
    for (std::size_t c = 0; c < params.random_count; ++c) {
      std::vector<Elem> shuffled = pool;
      for (std::size_t i = 0; i < params.random_size; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (shuffled.size() - i));
        std::swap(shuffled[i], shuffled[j]);
      }
      shuffled.resize(params.random_size);
      std::sort(shuffled.begin(), shuffled.end());
      candidates.push_back(build(shuffled));
    }
  }

  std::vector<SampleOutcome> out;
  for (auto& D : candidates) {
    auto hyp = doubling_report(D);
    std::optional<SearchReport> report;
    if (hyp.hypothesis_holds) report = verify_mcconnel_extended(D, opts);
    out.push_back(SampleOutcome{std::move(D), hyp, std::move(report)});
  }
  return out;
}

}  // namespace dirlab
