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

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dirlab/directions.hpp"
#include "dirlab/linearized.hpp"
#include "dirlab/search.hpp"
#include "dirlab/set_algebra.hpp"

namespace dirlab {

using Json = nlohmann::json;

inline constexpr std::string_view kArtifactVersion = "1.0.0";

// Report payloads. nlohmann::json keeps object keys sorted, and every exact
// quantity is an integer or an {"num", "den"} pair, so dump() is canonical.
Json to_json(const FieldCtx& f);
Json to_json(const MulSet& s);
Json to_json(const Rational& r);
Json to_json(const DoublingReport& r);
Json to_json(const DirectionSet& d);
Json to_json(const FrobeniusMonomial& m);
Json to_json(const LinPoly& L);
Json to_json(const CosetDecomposition& c);
Json to_json(const SearchReport& r);
Json to_json(const DirectionsTheoremReport& r);
Json to_json(const CensusReport& r);
Json to_json(const SampleOutcome& s);

Rational rational_from_json(const Json& j);
DoublingReport doubling_report_from_json(const Json& j);
MulSet mul_set_from_json(const FieldPtr& ctx, const Json& j);
DirectionSet direction_set_from_json(const FieldPtr& ctx, const Json& j);
FrobeniusMonomial monomial_from_json(const Json& j);
LinPoly lin_poly_from_json(const FieldPtr& ctx, const Json& j);
SearchReport search_report_from_json(const FieldPtr& ctx, const Json& j);
DirectionsTheoremReport directions_theorem_from_json(const Json& j);
CensusReport census_report_from_json(const FieldPtr& ctx, const Json& j);

/// Structural equality of reports as serialized, ignoring wall time.
bool same_report(const SearchReport& a, const SearchReport& b);
bool same_report(const CensusReport& a, const CensusReport& b);

struct ReportEnvelope {
  std::string version{kArtifactVersion};
  Json field;    // to_json(FieldCtx), resolved modulus included
  Json command;  // verb plus verb-specific parameters
  std::string timestamp;
  Json payload;  // carries a "kind" tag
  int exit_status = 0;
};

Json to_json(const ReportEnvelope& e);
ReportEnvelope envelope_from_json(const Json& j);

enum class Format { Json, Csv, Text };

Format parse_format(std::string_view s);

/// Serialized report. JSON is compact with sorted keys; CSV covers flat
/// tallies only and throws UnrepresentableInFormat otherwise.
std::string emit(const ReportEnvelope& e, Format format);

/// Copy of j without the run-dependent "timestamp" and "wall_time_ns" keys.
Json strip_volatile(const Json& j);
/// FNV-1a 64 of the canonical JSON (volatile keys and the digest excluded), as hex.
std::string canonical_digest(const ReportEnvelope& e);

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

// File formats.

/// {"p":..., "n":..., "values":[q codes]} with optional "modulus".
FuncTable func_table_from_json(const Json& j);
FuncTable load_func_table(const std::string& path);
/// [[x, y], ...]
PointSet point_set_from_json(const FieldPtr& ctx, const Json& j);
PointSet load_point_set(const FieldPtr& ctx, const std::string& path);

}  // namespace dirlab
