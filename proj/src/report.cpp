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
#include "dirlab/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "dirlab/error.hpp"

namespace dirlab {

namespace {

Json codes(const std::vector<Elem>& v) { return Json(v); }

std::vector<Elem> codes_from(const Json& j) { return j.get<std::vector<Elem>>(); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

template <class Fn>
auto wrap_parse(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string(what) + ": " + e.what());
  }
}

std::string text_summary(const ReportEnvelope& e) {
  std::ostringstream out;
  const Json& f = e.field;
  out << "field GF(" << f.at("q").get<std::uint64_t>() << ") p=" << f.at("p") << " n=" << f.at("n")
      << " modulus=" << f.at("modulus").dump() << " generator=" << f.at("generator") << "\n";
  out << "command " << e.command.at("verb").get<std::string>() << "\n";
  const Json& p = e.payload;
  const std::string kind = p.value("kind", "");
  auto hyp_line = [&](const Json& h) {
    out << "|D|=" << h.at("size_D") << " |DD|=" << h.at("size_DD") << " |DD^-1D^-1|=" << h.at("size_triple")
        << " c=" << h.at("c").at("num") << "/" << h.at("c").at("den")
        << " hypothesis=" << (h.at("hypothesis_holds").get<bool>() ? "holds" : "fails")
        << " cube-bound=" << (h.at("pr_sufficient_holds").get<bool>() ? "holds" : "fails") << "\n";
  };
  if (kind == "search") {
    out << "D=" << p.at("D").dump() << "\n";
    hyp_line(p.at("hypothesis"));
    out << "solutions=" << p.at("solution_count") << " all_monomial=" << p.at("all_monomial")
        << " expected=" << p.at("expected").size() << " nodes=" << p.at("node_count")
        << " violation=" << p.at("violation") << "\n";
  } else if (kind == "directions-theorem") {
    out << "checked=" << p.at("checked") << " within_bound=" << p.at("within_bound")
        << " violations=" << p.at("violations") << "\n";
  } else if (kind == "census") {
    out << "linearized polynomials=" << p.at("polynomials") << " distinct direction sets=" << p.at("classified").size()
        << " hypothesis sets=" << p.at("hypothesis_sets") << "\n";
    for (const auto& row : p.at("size_counts")) out << "  |D_f|=" << row.at("size") << ": " << row.at("count") << "\n";
    out << "forward_violations=" << p.at("forward_violations") << " converse_checked=" << p.at("converse_checked")
        << " converse_violations=" << p.at("converse_violations") << "\n";
  } else if (kind == "samples") {
    for (const auto& s : p.at("samples")) {
      out << "D=" << s.at("D").dump() << "\n  ";
      hyp_line(s.at("hypothesis"));
      if (!s.at("report").is_null())
        out << "  solutions=" << s.at("report").at("solution_count")
            << " all_monomial=" << s.at("report").at("all_monomial") << "\n";
    }
  } else if (kind == "directions") {
    out << "directions=" << p.at("directions").dump() << " infinity=" << p.at("infinity") << "\n";
  } else if (kind == "analysis") {
    out << "directions=" << p.at("directions").at("directions").dump() << "\n";
    out << "linearized=" << (p.at("linearized").is_null() ? "no" : p.at("linearized").dump()) << "\n";
    out << "monomial=" << (p.at("monomial").is_null() ? "no" : p.at("monomial").dump()) << "\n";
  } else {
    out << p.dump() << "\n";
  }
  out << "exit_status=" << e.exit_status << "\n";
  return out.str();
}

}  // namespace

Json to_json(const FieldCtx& f) {
  return Json{{"p", f.p()},
              {"n", f.n()},
              {"q", f.q()},
              {"modulus", std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end())},
              {"generator", f.generator()}};
}

Json to_json(const MulSet& s) { return codes(s.elements()); }

Json to_json(const Rational& r) { return Json{{"num", r.num}, {"den", r.den}}; }

Json to_json(const DoublingReport& r) {
  return Json{{"size_D", r.size_D},
              {"size_DD", r.size_DD},
              {"size_triple", r.size_triple},
              {"c", to_json(r.c)},
              {"hypothesis_holds", r.hypothesis_holds},
              {"pr_sufficient_holds", r.pr_sufficient_holds}};
}

Json to_json(const DirectionSet& d) {
  return Json{{"directions", codes(d.finite_elements())}, {"infinity", d.has_infinity()}};
}

Json to_json(const FrobeniusMonomial& m) { return Json{{"a", m.a}, {"j", m.j}, {"b", m.b}}; }

Json to_json(const LinPoly& L) { return Json{{"coeffs", L.coeffs}}; }

Json to_json(const CosetDecomposition& c) {
  return Json{{"a", c.a}, {"index", c.index}, {"subgroup", to_json(c.subgroup)}};
}

Json to_json(const SearchReport& r) {
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back(s.values());
  Json forms = Json::array();
  for (const auto& m : r.monomial_forms) forms.push_back(to_json(m));
  Json expected = Json::array();
  for (const auto& m : r.expected) expected.push_back(to_json(m));
  return Json{{"kind", "search"},
              {"D", to_json(r.D)},
              {"hypothesis", to_json(r.hypothesis)},
              {"solutions", std::move(sols)},
              {"solution_count", r.solutions.size()},
              {"all_monomial", r.all_monomial},
              {"monomial_forms", std::move(forms)},
              {"expected", std::move(expected)},
              {"revalidated", r.revalidated},
              {"expected_contained", r.expected_contained},
              {"expected_equal", r.expected_equal},
              {"node_count", r.node_count},
              {"violation", r.violation()},
              {"wall_time_ns", r.wall_time.count()}};
}

Json to_json(const DirectionsTheoremReport& r) {
  return Json{{"kind", "directions-theorem"},
              {"q", r.q},
              {"checked", r.checked},
              {"within_bound", r.within_bound},
              {"violations", r.violations}};
}

Json to_json(const CensusReport& r) {
  Json sizes = Json::array();
  for (const auto& [size, count] : r.size_counts) sizes.push_back(Json{{"size", size}, {"count", count}});
  Json classified = Json::array();
  for (const auto& e : r.classified) {
    Json row = to_json(e.directions);
    row["multiplicity"] = e.multiplicity;
    row["in_multiplicative_group"] = e.in_multiplicative_group;
    row["hypothesis_holds"] = e.hypothesis_holds;
    row["coset"] = e.coset ? to_json(*e.coset) : Json(nullptr);
    classified.push_back(std::move(row));
  }
  return Json{{"kind", "census"},
              {"polynomials", r.polynomials},
              {"size_counts", std::move(sizes)},
              {"classified", std::move(classified)},
              {"hypothesis_sets", r.hypothesis_sets},
              {"forward_violations", r.forward_violations},
              {"converse_checked", r.converse_checked},
              {"converse_violations", r.converse_violations},
              {"violation", r.violation()}};
}

Json to_json(const SampleOutcome& s) {
  return Json{{"D", to_json(s.D)},
              {"hypothesis", to_json(s.hypothesis)},
              {"report", s.report ? to_json(*s.report) : Json(nullptr)},
              {"violation", s.violation()}};
}

Rational rational_from_json(const Json& j) {
  return wrap_parse("rational", [&] { return Rational{j.at("num").get<std::uint64_t>(), j.at("den").get<std::uint64_t>()}; });
}

DoublingReport doubling_report_from_json(const Json& j) {
  return wrap_parse("doubling report", [&] {
    DoublingReport r;
    r.size_D = j.at("size_D").get<std::uint64_t>();
    r.size_DD = j.at("size_DD").get<std::uint64_t>();
    r.size_triple = j.at("size_triple").get<std::uint64_t>();
    r.c = rational_from_json(j.at("c"));
    r.hypothesis_holds = j.at("hypothesis_holds").get<bool>();
    r.pr_sufficient_holds = j.at("pr_sufficient_holds").get<bool>();
    return r;
  });
}

MulSet mul_set_from_json(const FieldPtr& ctx, const Json& j) {
  return wrap_parse("set", [&] { return MulSet::from_codes(ctx, codes_from(j)); });
}

DirectionSet direction_set_from_json(const FieldPtr& ctx, const Json& j) {
  return wrap_parse("direction set", [&] {
    DirectionSet d(ctx);
    for (Elem e : codes_from(j.at("directions"))) {
      ctx->check(e);
      d.finite().set(e);
    }
    d.set_infinity(j.at("infinity").get<bool>());
    return d;
  });
}

FrobeniusMonomial monomial_from_json(const Json& j) {
  return wrap_parse("monomial", [&] {
    return FrobeniusMonomial{j.at("a").get<Elem>(), j.at("j").get<std::uint32_t>(), j.at("b").get<Elem>()};
  });
}

LinPoly lin_poly_from_json(const FieldPtr& ctx, const Json& j) {
  return wrap_parse("linearized polynomial", [&] { return LinPoly(ctx, codes_from(j.at("coeffs"))); });
}

SearchReport search_report_from_json(const FieldPtr& ctx, const Json& j) {
  return wrap_parse("search report", [&] {
    SearchReport r{.D = mul_set_from_json(ctx, j.at("D")), .hypothesis = doubling_report_from_json(j.at("hypothesis"))};
    for (const auto& s : j.at("solutions")) r.solutions.emplace_back(ctx, codes_from(s));
    r.all_monomial = j.at("all_monomial").get<bool>();
    for (const auto& m : j.at("monomial_forms")) r.monomial_forms.push_back(monomial_from_json(m));
    for (const auto& m : j.at("expected")) r.expected.push_back(monomial_from_json(m));
    r.revalidated = j.at("revalidated").get<bool>();
    r.expected_contained = j.at("expected_contained").get<bool>();
    r.expected_equal = j.at("expected_equal").get<bool>();
    r.node_count = j.at("node_count").get<std::uint64_t>();
    r.wall_time = std::chrono::nanoseconds(j.value("wall_time_ns", std::int64_t{0}));
    return r;
  });
}

DirectionsTheoremReport directions_theorem_from_json(const Json& j) {
  return wrap_parse("directions report", [&] {
    return DirectionsTheoremReport{j.at("q").get<std::uint32_t>(), j.at("checked").get<std::uint64_t>(),
                                   j.at("within_bound").get<std::uint64_t>(), j.at("violations").get<std::uint64_t>()};
  });
}

CensusReport census_report_from_json(const FieldPtr& ctx, const Json& j) {
  return wrap_parse("census report", [&] {
    CensusReport r;
    r.field = ctx->resolved_spec();
    r.polynomials = j.at("polynomials").get<std::uint64_t>();
    for (const auto& row : j.at("size_counts"))
      r.size_counts[row.at("size").get<std::uint64_t>()] = row.at("count").get<std::uint64_t>();
    for (const auto& row : j.at("classified")) {
      CensusEntry e{direction_set_from_json(ctx, row), row.at("multiplicity").get<std::uint64_t>()};
      e.in_multiplicative_group = row.at("in_multiplicative_group").get<bool>();
      e.hypothesis_holds = row.at("hypothesis_holds").get<bool>();
      if (!row.at("coset").is_null()) {
        const Json& c = row.at("coset");
        e.coset = CosetDecomposition{c.at("a").get<Elem>(), mul_set_from_json(ctx, c.at("subgroup")),
                                     c.at("index").get<std::uint32_t>()};
      }
      r.classified.push_back(std::move(e));
    }
    r.hypothesis_sets = j.at("hypothesis_sets").get<std::uint64_t>();
    r.forward_violations = j.at("forward_violations").get<std::uint64_t>();
    r.converse_checked = j.at("converse_checked").get<std::uint64_t>();
    r.converse_violations = j.at("converse_violations").get<std::uint64_t>();
    return r;
  });
}

bool same_report(const SearchReport& a, const SearchReport& b) {
  return strip_volatile(to_json(a)) == strip_volatile(to_json(b));
}

bool same_report(const CensusReport& a, const CensusReport& b) { return to_json(a) == to_json(b); }

Json to_json(const ReportEnvelope& e) {
  return Json{{"artifact", "dirlab"},    {"version", e.version}, {"field", e.field},
              {"command", e.command},    {"timestamp", e.timestamp}, {"payload", e.payload},
              {"exit_status", e.exit_status}};
}

ReportEnvelope envelope_from_json(const Json& j) {
  return wrap_parse("envelope", [&] {
    ReportEnvelope e;
    e.version = j.at("version").get<std::string>();
    e.field = j.at("field");
    e.command = j.at("command");
    e.timestamp = j.value("timestamp", "");
    e.payload = j.at("payload");
    e.exit_status = j.at("exit_status").get<int>();
    return e;
  });
}

Format parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw Error(ErrorKind::ParseError, "unknown format '" + std::string(s) + "' (use json, csv or text)");
}

Json strip_volatile(const Json& j) {
  if (j.is_object()) {
    Json out = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "timestamp" || it.key() == "wall_time_ns" || it.key() == "digest") continue;
      out[it.key()] = strip_volatile(it.value());
    }
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& v : j) out.push_back(strip_volatile(v));
    return out;
  }
  return j;
}

std::string canonical_digest(const ReportEnvelope& e) {
  const std::string bytes = strip_volatile(to_json(e)).dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string emit(const ReportEnvelope& e, Format format) {
  switch (format) {
    case Format::Json: {
      Json j = to_json(e);
      j["digest"] = canonical_digest(e);
      return j.dump() + "\n";
    }
    case Format::Text:
      return text_summary(e);
    case Format::Csv: {
      const std::string kind = e.payload.value("kind", "");
      std::ostringstream out;
      if (kind == "census") {
        out << "size,count\n";
        for (const auto& row : e.payload.at("size_counts")) out << row.at("size") << "," << row.at("count") << "\n";
        return out.str();
      }
      if (kind == "directions-theorem") {
        const Json& p = e.payload;
        out << "q,checked,within_bound,violations\n"
            << p.at("q") << "," << p.at("checked") << "," << p.at("within_bound") << "," << p.at("violations") << "\n";
        return out.str();
      }
      throw Error(ErrorKind::UnrepresentableInFormat,
                  "'" + kind + "' reports hold nested tables; use --format json or text");
    }
  }
  return {};
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

FuncTable func_table_from_json(const Json& j) {
  return wrap_parse("function table", [&] {
    FieldSpec spec{j.at("p").get<std::uint32_t>(), j.at("n").get<std::uint32_t>(), {}};
    if (j.contains("modulus")) spec.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    return FuncTable(build_field(spec), codes_from(j.at("values")));
  });
}

FuncTable load_func_table(const std::string& path) { return func_table_from_json(read_json_file(path)); }

PointSet point_set_from_json(const FieldPtr& ctx, const Json& j) {
  return wrap_parse("point set", [&] {
    PointSet u{ctx, {}};
    for (const auto& pt : j) {
      if (!pt.is_array() || pt.size() != 2) throw Error(ErrorKind::ParseError, "points are [x, y] pairs");
      u.points.push_back(Point{pt[0].get<Elem>(), pt[1].get<Elem>()});
    }
    return u;
  });
}

PointSet load_point_set(const FieldPtr& ctx, const std::string& path) {
  return point_set_from_json(ctx, read_json_file(path));
}

}  // namespace dirlab
