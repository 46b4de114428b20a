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
#include "dirlab/field.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "dirlab/error.hpp"

namespace dirlab {

namespace {

using Poly = std::vector<std::uint32_t>;  // over F_p, constant first

void trim_poly(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_rem(Poly a, const Poly& m, std::uint32_t p) {
  trim_poly(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = (lead * m[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim_poly(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  return poly_rem(std::move(prod), m, p);
}

Poly poly_from_code(std::uint64_t code, std::uint32_t p, std::uint32_t len) {
  Poly out(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  trim_poly(out);
  return out;
}

std::uint64_t poly_to_code(const Poly& a, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

std::uint32_t parse_uint(std::string_view s, std::string_view what) {
  std::uint32_t v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw Error(ErrorKind::ParseError, "bad integer for " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

bool is_irreducible_over_prime(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim_poly(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t deg = f.size() - 1;
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
      Poly d = poly_from_code(enc, p, static_cast<std::uint32_t>(k));
      d.resize(k + 1, 0);
      d[k] = 1;
      if (poly_rem(f, d, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t n) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) count *= p;
  for (std::uint64_t enc = 0; enc < count; ++enc) {
    Poly m = poly_from_code(enc, p, n);
    m.resize(n + 1, 0);
    m[n] = 1;
    if (is_irreducible_over_prime(m, p)) return m;
  }
  // Irreducible polynomials of every degree exist over every prime field.
  throw Error(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
}

FieldPtr build_field(const FieldSpec& spec) {
  if (!is_prime(spec.p))
    throw Error(ErrorKind::NonPrimeCharacteristic, "p=" + std::to_string(spec.p) + " is not prime");
  if (spec.n == 0) throw Error(ErrorKind::DegreeMismatch, "n must be at least 1");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < spec.n; ++i) {
    q *= spec.p;
    if (q > kMaxFieldOrder)
      throw Error(ErrorKind::FieldTooLarge, "q=p^n exceeds " + std::to_string(kMaxFieldOrder));
  }

  Poly modulus;
  if (spec.modulus) {
    modulus = *spec.modulus;
    if (modulus.size() != spec.n + 1 || modulus.back() == 0)
      throw Error(ErrorKind::DegreeMismatch, "modulus must have exactly n+1 coefficients with nonzero leading term");
    for (auto c : modulus)
      if (c >= spec.p) throw Error(ErrorKind::InvalidModulus, "modulus coefficient out of range");
    if (modulus.back() != 1) throw Error(ErrorKind::InvalidModulus, "modulus must be monic");
    if (!is_irreducible_over_prime(modulus, spec.p))
      throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over F_p");
  } else {
    modulus = default_modulus(spec.p, spec.n);
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = spec.p;
  ctx->n_ = spec.n;
  ctx->q_ = static_cast<std::uint32_t>(q);
  ctx->modulus_ = modulus;

  const std::uint32_t p = spec.p;
  const std::uint32_t order = ctx->q_ - 1;
  const auto factors = prime_factors(order);

  Poly gen;
  for (std::uint64_t c = 1; c < q; ++c) {
    Poly cand = poly_from_code(c, p, spec.n);
    bool primitive = true;
    for (auto l : factors) {
      if (poly_powmod(cand, order / l, modulus, p) == Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      ctx->generator_ = static_cast<Elem>(c);
      gen = std::move(cand);
      break;
    }
  }

  ctx->log_.assign(q, FieldCtx::kNoLog);
  ctx->exp2_.assign(2 * static_cast<std::size_t>(order), 0);
  Poly cur{1};
  for (std::uint32_t k = 0; k < order; ++k) {
    const auto code = static_cast<Elem>(poly_to_code(cur, p));
    if (ctx->log_[code] != FieldCtx::kNoLog)
      throw Error(ErrorKind::InvalidModulus, "generator order is smaller than q-1");
    ctx->log_[code] = k;
    ctx->exp2_[k] = code;
    ctx->exp2_[k + order] = code;
    cur = poly_mulmod(cur, gen, modulus, p);
  }

  ctx->neg_table_.resize(q);
  for (std::uint64_t e = 0; e < q; ++e) {
    std::uint64_t code = e, out = 0, scale = 1;
    for (std::uint32_t i = 0; i < spec.n; ++i) {
      const std::uint64_t d = code % p;
      code /= p;
      out += ((p - d) % p) * scale;
      scale *= p;
    }
    ctx->neg_table_[e] = static_cast<Elem>(out);
  }

  if (p != 2 && q <= 256) {
    ctx->add_table_.resize(q * q);
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) ctx->add_table_[a * q + b] = ctx->add_digits(a, b);
  }

  ctx->frob_mult_.resize(spec.n);
  std::uint64_t pj = 1;
  for (std::uint32_t j = 0; j < spec.n; ++j) {
    ctx->frob_mult_[j] = order == 0 ? 0 : static_cast<std::uint32_t>(pj % order);
    pj = (pj * p) % (order == 0 ? 1 : order);
  }
  return ctx;
}

void FieldCtx::check(Elem e) const {
  if (e >= q_)
    throw Error(ErrorKind::InvalidElement, "code " + std::to_string(e) + " is not in [0, " + std::to_string(q_) + ")");
}

Elem FieldCtx::add_digits(Elem a, Elem b) const {
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    const Elem s = (a % p_ + b % p_) % p_;
    a /= p_;
    b /= p_;
    out += s * scale;
    scale *= p_;
  }
  return out;
}

Elem FieldCtx::div(Elem a, Elem b) const {
  if (b == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (a == 0) return 0;
  return exp2_[static_cast<std::size_t>(log_[a]) + group_order() - log_[b]];
}

Elem FieldCtx::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "zero has no inverse");
  return exp2_[group_order() - log_[a]];
}

Elem FieldCtx::pow(Elem a, std::int64_t k) const {
  if (a == 0) {
    if (k < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return k == 0 ? 1 : 0;
  }
  const std::int64_t m = group_order();
  const std::int64_t r = ((k % m) + m) % m;
  return exp2_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r)) % m)];
}

Elem FieldCtx::frobenius(Elem e, std::uint32_t j) const {
  if (j >= n_)
    throw Error(ErrorKind::JOutOfRange, "j=" + std::to_string(j) + " outside [0, " + std::to_string(n_) + ")");
  if (e == 0) return 0;
  return exp2_[static_cast<std::size_t>((std::uint64_t{log_[e]} * frob_mult_[j]) % group_order())];
}

std::uint32_t FieldCtx::log(Elem e) const {
  if (e == 0) throw Error(ErrorKind::DivisionByZero, "log of zero");
  return log_[e];
}

std::vector<std::uint32_t> FieldCtx::digits(Elem e) const {
  std::vector<std::uint32_t> out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    out[i] = e % p_;
    e /= p_;
  }
  return out;
}

Elem FieldCtx::from_digits(std::span<const std::uint32_t> d) const {
  Elem out = 0;
  for (std::size_t i = d.size(); i-- > 0;) out = out * p_ + d[i] % p_;
  return out;
}

FieldSpec parse_field_spec(std::string_view text) {
  FieldSpec spec;
  bool have_p = false, have_n = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::ParseError, "expected key=value, got '" + raw + "'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "p") {
      spec.p = parse_uint(value, "p");
      have_p = true;
    } else if (key == "n") {
      spec.n = parse_uint(value, "n");
      have_n = true;
    } else if (key == "modulus") {
      std::vector<std::uint32_t> coeffs;
      std::size_t start = 0;
      while (start <= value.size()) {
        auto comma = value.find(',', start);
        if (comma == std::string_view::npos) comma = value.size();
        coeffs.push_back(parse_uint(trim(value.substr(start, comma - start)), "modulus"));
        start = comma + 1;
      }
      spec.modulus = std::move(coeffs);
    } else {
      throw Error(ErrorKind::ParseError, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_p || !have_n) throw Error(ErrorKind::ParseError, "field file needs both p= and n=");
  return spec;
}

FieldSpec load_field_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open field file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_field_spec(buf.str());
}

}  // namespace dirlab
