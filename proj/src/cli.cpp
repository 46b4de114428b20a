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
#include "dirlab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"

#include "dirlab/error.hpp"
#include "dirlab/report.hpp"

namespace dirlab {

namespace {

// Input problem tied to one flag; printed with a one-line fix.
struct UsageError {
  std::string flag;
  std::string problem;
  std::string fix;
};

struct RunConfig {
  std::string field_path;
  std::optional<std::uint32_t> p, n;
  std::string modulus;
  std::string format = "json";
  std::string out_path;
  std::optional<unsigned> workers;
  std::optional<std::uint64_t> seed;
  bool canonical = false;
  std::uint64_t max_solutions = 1'000'000;

  // Set selection
  std::string set_literal;
  std::optional<std::uint32_t> subgroup_index;
  std::string coset;

  // sample-doubling
  std::string strategy = "subgroup-plus-points";
  std::vector<std::string> extras;
  std::size_t random_count = 0;
  std::size_t random_size = 1;

  // directions / analyze
  std::string func_path;
  std::string points_path;
};

std::vector<std::uint32_t> parse_code_list(const std::string& text, const std::string& flag) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }), s.end());
  std::vector<std::uint32_t> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    std::uint32_t v = 0;
    const char* first = s.data() + start;
    const char* last = s.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last)
      throw UsageError{flag, "'" + text + "' is not a comma-separated list of integers", "write codes like \"1,2,4\""};
    out.push_back(v);
    start = comma + 1;
  }
  return out;
}

unsigned resolve_workers(const RunConfig& cfg) {
  if (cfg.workers) {
    if (*cfg.workers == 0) throw UsageError{"--workers", "must be at least 1", "pass --workers 1 or more"};
    return *cfg.workers;
  }
  if (const char* env = std::getenv("DIRLAB_WORKERS")) {
    unsigned v = 0;
    const std::string s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
      throw UsageError{"DIRLAB_WORKERS", "'" + s + "' is not a positive integer", "export DIRLAB_WORKERS=4 or unset it"};
    return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

FieldPtr resolve_field(const RunConfig& cfg, bool required = true) {
  const bool inline_spec = cfg.p || cfg.n;
  if (!cfg.field_path.empty() && inline_spec)
    throw UsageError{"--field", "given together with --p/--n", "use either --field <path> or --p/--n, not both"};
  if (!cfg.field_path.empty()) return build_field(load_field_spec(cfg.field_path));
  if (!inline_spec) {
    if (!required) return nullptr;
    throw UsageError{"--p", "no field given", "pass --field <path> or --p <prime> --n <degree>"};
  }
  if (!cfg.p || !cfg.n) throw UsageError{cfg.p ? "--n" : "--p", "missing", "pass both --p and --n"};
  FieldSpec spec{*cfg.p, *cfg.n, {}};
  if (!cfg.modulus.empty()) spec.modulus = parse_code_list(cfg.modulus, "--modulus");
  return build_field(spec);
}

std::pair<MulSet, Json> resolve_set(const RunConfig& cfg, const FieldPtr& ctx) {
  const int given = !cfg.set_literal.empty() + cfg.subgroup_index.has_value() + !cfg.coset.empty();
  if (given != 1)
    throw UsageError{"--set", "exactly one of --set, --subgroup-index, --coset is required",
                     "pass e.g. --set \"1,2,4\" or --subgroup-index 2 or --coset 3:2"};
  if (!cfg.set_literal.empty()) {
    auto codes = parse_code_list(cfg.set_literal, "--set");
    if (codes.empty()) throw UsageError{"--set", "empty set", "list at least one nonzero code"};
    MulSet D = MulSet::from_codes(ctx, codes);
    return {D, Json{{"set", to_json(D)}}};
  }
  if (cfg.subgroup_index) {
    MulSet D = subgroup_by_index(ctx, *cfg.subgroup_index);
    return {D, Json{{"subgroup_index", *cfg.subgroup_index}, {"set", to_json(D)}}};
  }
  const auto colon = cfg.coset.find(':');
  if (colon == std::string::npos)
    throw UsageError{"--coset", "'" + cfg.coset + "' is not of the form a:d", "write --coset 3:2 for 3 times the index-2 subgroup"};
  const auto a = parse_code_list(cfg.coset.substr(0, colon), "--coset");
  const auto d = parse_code_list(cfg.coset.substr(colon + 1), "--coset");
  if (a.size() != 1 || d.size() != 1)
    throw UsageError{"--coset", "'" + cfg.coset + "' is not of the form a:d", "write --coset 3:2"};
  MulSet D = scale_set(a[0], subgroup_by_index(ctx, d[0]));
  return {D, Json{{"coset", {{"a", a[0]}, {"index", d[0]}}}, {"set", to_json(D)}}};
}

Json analysis_payload(const FuncTable& f) {
  const DirectionSet dirs = directions_of_function(f);
  Json payload{{"kind", "analysis"}, {"values", f.values()}, {"directions", to_json(dirs)},
               {"direction_count", dirs.size()}};
  const auto lin = detect_linearized(f);
  payload["linearized"] = lin ? to_json(*lin) : Json(nullptr);
  const auto mono = detect_frobenius_monomial(f);
  payload["monomial"] = mono ? to_json(*mono) : Json(nullptr);
  payload["image_ratio"] = f(0) == 0 ? to_json(image_ratio_set(f)) : Json(nullptr);
  const auto as_set = dirs.as_mul_set();
  const auto coset = as_set ? coset_decompose(*as_set) : std::nullopt;
  payload["coset"] = coset ? to_json(*coset) : Json(nullptr);
  payload["hypothesis"] = as_set ? to_json(doubling_report(*as_set)) : Json(nullptr);
  return payload;
}

int execute(CLI::App& app, const RunConfig& cfg, std::ostream& out) {
  const Format format = [&] {
    try {
      return parse_format(cfg.format);
    } catch (const Error&) {
      throw UsageError{"--format", "unknown format '" + cfg.format + "'", "use --format json, csv or text"};
    }
  }();
  const unsigned workers = resolve_workers(cfg);
  SearchOptions opts{workers, cfg.max_solutions};

  ReportEnvelope env;
  env.timestamp = utc_timestamp();
  bool violation = false;

  const auto* sub = app.get_subcommands().front();
  const std::string verb = sub->get_name();
  env.command = Json{{"verb", verb}};

  if (verb == "search" || verb == "verify-mcconnel") {
    const FieldPtr ctx = resolve_field(cfg);
    auto [D, echo] = resolve_set(cfg, ctx);
    env.command.update(echo);
    const SearchReport rep = verify_mcconnel_extended(D, opts);
    env.field = to_json(*ctx);
    env.payload = to_json(rep);
    violation = rep.violation();
  } else if (verb == "verify-directions") {
    const FieldPtr ctx = resolve_field(cfg);
    const auto rep = verify_directions_theorem(ctx, workers);
    env.field = to_json(*ctx);
    env.payload = to_json(rep);
    violation = rep.violations != 0;
  } else if (verb == "census") {
    const FieldPtr ctx = resolve_field(cfg);
    const auto rep = corollary_census(ctx, workers);
    env.field = to_json(*ctx);
    env.payload = to_json(rep);
    violation = rep.violation();
  } else if (verb == "sample-doubling") {
    const FieldPtr ctx = resolve_field(cfg);
    if (!cfg.subgroup_index)
      throw UsageError{"--subgroup-index", "missing", "pass --subgroup-index d for the subgroup K"};
    SamplerParams params;
    if (cfg.strategy == "subgroup-plus-points")
      params.strategy = SamplerStrategy::SubgroupPlusPoints;
    else if (cfg.strategy == "coset-union")
      params.strategy = SamplerStrategy::CosetUnion;
    else
      throw UsageError{"--strategy", "unknown strategy '" + cfg.strategy + "'",
                       "use --strategy subgroup-plus-points or --strategy coset-union"};
    params.index = *cfg.subgroup_index;
    for (const auto& e : cfg.extras) params.explicit_sets.push_back(parse_code_list(e, "--extra"));
    params.random_count = cfg.random_count;
    params.random_size = cfg.random_size;
    params.seed = cfg.seed;
    if (params.random_count > 0 && !params.seed)
      throw UsageError{"--seed", "random sampling needs a seed", "pass --seed <int> with --random"};
    if (params.explicit_sets.empty() && params.random_count == 0)
      throw UsageError{"--extra", "no candidates requested", "pass --extra \"5\" or --random 10 --seed 1"};
    const auto samples = small_doubling_sampler(ctx, params, opts);
    Json list = Json::array();
    for (const auto& s : samples) {
      list.push_back(to_json(s));
      violation = violation || s.violation();
    }
    env.command.update(Json{{"strategy", cfg.strategy},
                            {"subgroup_index", params.index},
                            {"extras", params.explicit_sets},
                            {"random", params.random_count},
                            {"size", params.random_size},
                            {"seed", params.seed ? Json(*params.seed) : Json(nullptr)}});
    env.field = to_json(*ctx);
    env.payload = Json{{"kind", "samples"}, {"samples", std::move(list)}};
  } else if (verb == "directions" || verb == "analyze") {
    if (cfg.func_path.empty() == cfg.points_path.empty() || (verb == "analyze" && cfg.func_path.empty()))
      throw UsageError{"--func", verb == "analyze" ? "missing" : "exactly one of --func, --points is required",
                       "pass --func <table.json>" + std::string(verb == "analyze" ? "" : " or --points <points.json>")};
    if (!cfg.func_path.empty()) {
      const FuncTable f = load_func_table(cfg.func_path);
      if (const FieldPtr given = resolve_field(cfg, false); given && !given->same_model(f.field()))
        throw UsageError{"--field", "differs from the field in " + cfg.func_path, "drop --field/--p/--n for --func input"};
      env.field = to_json(f.field());
      env.command["values"] = f.values();
      if (verb == "analyze") {
        env.payload = analysis_payload(f);
      } else {
        env.payload = to_json(directions_of_function(f));
        env.payload["kind"] = "directions";
      }
    } else {
      const FieldPtr ctx = resolve_field(cfg);
      const PointSet U = load_point_set(ctx, cfg.points_path);
      Json pts = Json::array();
      for (const auto& pt : U.points) pts.push_back({pt.x, pt.y});
      env.command["points"] = std::move(pts);
      env.field = to_json(*ctx);
      env.payload = to_json(directions_of_points(U));
      env.payload["kind"] = "directions";
    }
  }

  env.exit_status = violation ? kExitViolation : kExitOk;
  std::string bytes;
  if (cfg.canonical && format == Format::Json) {
    Json j = strip_volatile(to_json(env));
    j["digest"] = canonical_digest(env);
    bytes = j.dump() + "\n";
  } else {
    bytes = emit(env, format);
  }
  if (cfg.out_path.empty()) {
    out << bytes;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw UsageError{"--out", "cannot write " + cfg.out_path, "pick a writable path"};
    file << bytes;
  }
  return env.exit_status;
}

void add_set_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--set", cfg.set_literal, "explicit set of nonzero codes, e.g. \"1,2,4\"");
  sub->add_option("--subgroup-index", cfg.subgroup_index, "the subgroup of this index in F_q^*");
  sub->add_option("--coset", cfg.coset, "a:d, the coset a times the index-d subgroup");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"dirlab: direction sets, difference quotients and Frobenius monomials over GF(p^n)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", cfg.field_path, "field file with p=, n= and optional modulus= lines");
  app.add_option("--p", cfg.p, "characteristic");
  app.add_option("--n", cfg.n, "extension degree");
  app.add_option("--modulus", cfg.modulus, "c0,c1,...,cn monic modulus, constant term first");
  app.add_option("--format", cfg.format, "json, csv or text");
  app.add_option("--out", cfg.out_path, "write the report here instead of stdout");
  app.add_option("--workers", cfg.workers, "worker threads (default: DIRLAB_WORKERS or all cores)");
  app.add_option("--seed", cfg.seed, "seed for random samplers");
  app.add_option("--max-solutions", cfg.max_solutions, "abort a search past this many solutions (0 = unlimited)");
  app.add_flag("--canonical", cfg.canonical, "omit timestamp and timings from JSON output");

  auto* search = app.add_subcommand("search", "enumerate all f with every difference quotient in D");
  add_set_options(search, cfg);
  auto* mcconnel = app.add_subcommand("verify-mcconnel", "search D and check the monomial conclusion");
  add_set_options(mcconnel, cfg);
  app.add_subcommand("verify-directions", "exhaustive check that few directions force linearity (q <= 9)");
  app.add_subcommand("census", "direction sets of all linearized polynomials");
  auto* sampler = app.add_subcommand("sample-doubling", "search small-doubling sets built from a subgroup");
  sampler->add_option("--strategy", cfg.strategy, "subgroup-plus-points or coset-union");
  sampler->add_option("--subgroup-index", cfg.subgroup_index, "index of the subgroup K");
  sampler->add_option("--extra", cfg.extras, "extra points (or coset representatives), one candidate per flag");
  sampler->add_option("--random", cfg.random_count, "number of random candidates");
  sampler->add_option("--size", cfg.random_size, "extra points (or cosets) per random candidate");
  auto* dirs = app.add_subcommand("directions", "direction set of a function table or point set");
  dirs->add_option("--func", cfg.func_path, "function table JSON");
  dirs->add_option("--points", cfg.points_path, "point list JSON");
  auto* analyze = app.add_subcommand("analyze", "linearized and monomial verdicts for a function table");
  analyze->add_option("--func", cfg.func_path, "function table JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nfix: run with --help for the accepted flags\n";
    return kExitUsage;
  }

  try {
    return execute(app, cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.flag << ": " << e.problem << "\nfix: " << e.fix << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace dirlab
