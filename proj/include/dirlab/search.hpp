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

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "dirlab/directions.hpp"
#include "dirlab/linearized.hpp"
#include "dirlab/set_algebra.hpp"

namespace dirlab {

/// Largest q accepted by the quotient-function search.
inline constexpr std::uint32_t kMaxSearchOrder = 256;
/// Largest q accepted by verify_directions_theorem.
inline constexpr std::uint32_t kMaxDirectionsOrder = 9;
/// Largest q^n accepted by corollary_census.
inline constexpr std::uint64_t kMaxCensusPolynomials = 100'000'000;

struct SearchOptions {
  unsigned workers = 1;
  /// Abort with SearchLimitExceeded past this many normalized solutions (0 = no limit).
  std::uint64_t max_solutions = 0;
};

struct Enumeration {
  std::vector<FuncTable> solutions;
  std::uint64_t node_count = 0;
};

/// Every f with (f(x) - f(y)) / (x - y) in D for all x != y, in
/// lexicographic table order. With normalize the search fixes f(0) = 0;
/// otherwise each normalized solution is also shifted by every constant.
/// Throws EmptySet, FieldTooLargeForExhaustion or SearchLimitExceeded.
Enumeration enumerate_quotient_functions_counted(const MulSet& D, bool normalize = true,
                                                 const SearchOptions& opts = {});
std::vector<FuncTable> enumerate_quotient_functions(const MulSet& D, bool normalize = true,
                                                    const SearchOptions& opts = {});

/// Whether every difference quotient of f lies in D. O(q^2), independent of
/// the search.
bool satisfies_quotient_condition(const FuncTable& f, const MulSet& D);

/// All (a, j, 0) with a * {x^(p^j - 1)} contained in D, sorted by (j, a).
std::vector<FrobeniusMonomial> expected_solution_set(const MulSet& D);

struct SearchReport {
  MulSet D;
  DoublingReport hypothesis;
  std::vector<FuncTable> solutions{};  // normalized, f(0) = 0
  bool all_monomial = true;          // vacuously true without solutions
  std::vector<FrobeniusMonomial> monomial_forms{};  // one per monomial solution, in solution order
  std::vector<FrobeniusMonomial> expected{};      // expected_solution_set(D)
  bool revalidated = true;         // every solution rechecked pointwise
  bool expected_contained = true;  // expected is a subset of the solutions
  bool expected_equal = true;      // expected equals the solutions as tables
  std::uint64_t node_count = 0;
  std::chrono::nanoseconds wall_time{0};

  /// The hypothesis holds but some solution is not a monomial, or the
  /// cross-checks against the oracle or the recheck disagree.
  bool violation() const;
};

/// Runs the search for D and checks that the hypothesis on D D^-1 D^-1
/// forces every solution to be a Frobenius monomial. Throws EmptySet.
SearchReport verify_mcconnel_extended(const MulSet& D, const SearchOptions& opts = {});

struct DirectionsTheoremReport {
  std::uint32_t q = 0;
  std::uint64_t checked = 0;       // tables with f(0) = 0, i.e. q^(q-1)
  std::uint64_t within_bound = 0;  // tables with 2 |D_f| <= q + 1
  std::uint64_t violations = 0;    // of those, tables that are not additive

  friend bool operator==(const DirectionsTheoremReport&, const DirectionsTheoremReport&) = default;
};

/// Walks every f with f(0) = 0 and checks that few directions force f to be
/// linearized. Prefixes whose directions already exceed (q+1)/2 are counted
/// without expanding them. Throws FieldTooLargeForExhaustion for q > 9.
DirectionsTheoremReport verify_directions_theorem(const FieldPtr& ctx, unsigned workers = 1);

struct CensusEntry {
  DirectionSet directions;
  std::uint64_t multiplicity = 0;     // linearized polynomials with this direction set
  bool in_multiplicative_group = false;  // 0 not among the directions
  bool hypothesis_holds = false;         // 2 |D D^-1 D^-1| <= q + 1
  std::optional<CosetDecomposition> coset{};
};

struct CensusReport {
  FieldSpec field;
  std::uint64_t polynomials = 0;                 // q^n
  std::map<std::uint64_t, std::uint64_t> size_counts;  // |D_f| -> count
  std::vector<CensusEntry> classified;           // distinct direction sets, by (size, elements)
  std::uint64_t hypothesis_sets = 0;
  std::uint64_t forward_violations = 0;
  std::uint64_t converse_checked = 0;
  std::uint64_t converse_violations = 0;

  bool violation() const { return forward_violations != 0 || converse_violations != 0; }
};

/// Direction sets of all linearized polynomials, with the coset
/// classification checked in both directions.
/// Throws FieldTooLargeForExhaustion when q^n > 10^8.
CensusReport corollary_census(const FieldPtr& ctx, unsigned workers = 1);

enum class SamplerStrategy { SubgroupPlusPoints, CosetUnion };

struct SamplerParams {
  SamplerStrategy strategy = SamplerStrategy::SubgroupPlusPoints;
  /// Index of the subgroup K.
  std::uint32_t index = 1;
  /// Explicit extra points E (subgroup-plus-points) or coset representatives
  /// (coset-union), one list per candidate.
  std::vector<std::vector<Elem>> explicit_sets;
  /// Additional random candidates, each with random_size extra points or cosets.
  std::size_t random_count = 0;
  std::size_t random_size = 1;
  std::optional<std::uint64_t> seed;
};

struct SampleOutcome {
  MulSet D;
  DoublingReport hypothesis;
  std::optional<SearchReport> report;  // present only when the hypothesis holds

  bool violation() const { return report && (report->violation() || !report->all_monomial); }
};

/// Builds candidate sets with small doubling and runs the search on those
/// satisfying the hypothesis. Throws ParseError when random candidates are
/// requested without a seed.
std::vector<SampleOutcome> small_doubling_sampler(const FieldPtr& ctx, const SamplerParams& params,
                                                  const SearchOptions& opts = {});

/// Uniform random nonempty subset of F_q^* (each element kept with
/// probability 1/2, redrawn when empty).
MulSet random_mul_set(const FieldPtr& ctx, std::mt19937_64& rng);

}  // namespace dirlab
