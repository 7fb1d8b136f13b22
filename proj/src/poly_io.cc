/* Copyright 2026 The compdet Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "compdet/poly_io.h"

#include <cctype>
#include <utility>
#include <vector>

#include "compdet/errors.h"

namespace compdet {
namespace {

using nlohmann::json;

void append_term(std::string& out, const Term& t, bool first,
                 const FormatOptions& options, int nvars) {
  const bool negative = sgn(t.coeff) < 0;
  if (first) {
    if (negative) out += '-';
  } else if (options.compact) {
    out += negative ? '-' : '+';
  } else {
    out += negative ? " - " : " + ";
  }
  const BigInt magnitude = abs(t.coeff);
  bool need_star = false;
  if (t.monomial.degree() == 0 || magnitude != 1) {
    out += magnitude.get_str();
    need_star = true;
  }
  for (int v = 0; v < nvars; ++v) {
    const std::uint32_t e = t.monomial.exponent(v);
    if (e == 0) continue;
    if (need_star) out += '*';
    out += (options.bare_x && nvars == 1) ? std::string("x")
                                          : "x" + std::to_string(v + 1);
    if (e > 1) out += "^" + std::to_string(e);
    need_star = true;
  }
}

struct RawTerm {
  std::vector<std::uint32_t> exps;  // grows with the largest index seen
  BigInt coeff;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  BigInt integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint32_t small_integer() {
    const std::size_t start = pos_;
    const BigInt v = integer();
    if (!v.fits_uint_p() || v > Monomial::kMaxDegree) {
      throw ParseError("exponent out of range", start);
    }
    return static_cast<std::uint32_t>(v.get_ui());
  }

  // Parses a sum of terms; the largest variable index is tracked in
  // max_index_.
  std::vector<RawTerm> poly() {
    std::vector<RawTerm> terms;
    bool negative = accept('-');
    while (true) {
      RawTerm t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        break;
      }
    }
    return terms;
  }

  int max_index() const { return max_index_; }

 private:
  RawTerm term() {
    RawTerm t{{}, BigInt(1)};
    do {
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= integer();
      } else if (c == 'x') {
        ++pos_;
        int index = 1;
        if (pos_ < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          const std::size_t start = pos_;
          const BigInt v = integer();
          if (v < 1 || v > Monomial::kMaxVars) {
            throw ParseError("variable index out of range", start);
          }
          index = static_cast<int>(v.get_si());
        }
        std::uint32_t e = 1;
        if (accept('^')) e = small_integer();
        if (t.exps.size() < static_cast<std::size_t>(index)) {
          t.exps.resize(static_cast<std::size_t>(index), 0);
        }
        t.exps[index - 1] += e;
        max_index_ = std::max(max_index_, index);
      } else {
        fail("expected a coefficient or a variable");
      }
    } while (accept('*'));
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int max_index_ = 0;
};

int resolve_nvars(const Parser& parser, std::optional<int> nvars) {
  if (!nvars) return parser.max_index();
  if (parser.max_index() > *nvars) {
    throw ParseError("variable x" + std::to_string(parser.max_index()) +
                         " exceeds nvars " + std::to_string(*nvars),
                     0);
  }
  return *nvars;
}

MultiPoly build(const std::vector<RawTerm>& raw, int nvars) {
  std::vector<Term> terms;
  terms.reserve(raw.size());
  for (const RawTerm& r : raw) {
    std::vector<std::uint32_t> exps = r.exps;
    exps.resize(static_cast<std::size_t>(nvars), 0);
    terms.push_back({Monomial(exps), r.coeff});
  }
  return MultiPoly::from_terms(nvars, std::move(terms));
}

}  // namespace

std::string format(const MultiPoly& f, FormatOptions options) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : f.terms()) {
    append_term(out, t, first, options, f.nvars());
    first = false;
  }
  return out;
}

std::string format(const FactoredForm& f, FormatOptions options) {
  if (f.is_zero()) return "0";
  std::string out;
  if (f.factors().empty()) return f.constant().get_str();
  if (f.constant() == -1) out += "-1*";
  bool first = true;
  for (const Factor& factor : f.factors()) {
    if (!first) out += '*';
    first = false;
    if (factor.base.is_constant()) {
      out += factor.base.constant_value().get_str();
    } else {
      out += '(' + format(factor.base, options) + ')';
    }
    if (factor.exponent != 1) out += '^' + factor.exponent.get_str();
  }
  return out;
}

MultiPoly parse_poly(std::string_view text, std::optional<int> nvars) {
  Parser parser(text);
  std::vector<RawTerm> raw = parser.poly();
  if (!parser.at_end()) parser.fail("unexpected trailing input");
  return build(raw, resolve_nvars(parser, nvars));
}

FactoredForm parse_factored(std::string_view text, std::optional<int> nvars) {
  Parser parser(text);
  struct RawFactor {
    std::vector<RawTerm> base;
    BigInt exponent;
  };
  std::vector<RawFactor> items;
  BigInt sign = parser.accept('-') ? -1 : 1;
  do {
    RawFactor item;
    if (parser.accept('(')) {
      item.base = parser.poly();
      parser.expect(')');
    } else if (std::isdigit(static_cast<unsigned char>(parser.peek()))) {
      item.base = {RawTerm{{}, parser.integer()}};
    } else {
      parser.fail("expected '(' or an integer");
    }
    item.exponent = parser.accept('^') ? parser.integer() : BigInt(1);
    items.push_back(std::move(item));
  } while (parser.accept('*'));
  if (!parser.at_end()) parser.fail("unexpected trailing input");

  const int v = resolve_nvars(parser, nvars);
  FactoredForm out(v, sign);
  for (const RawFactor& item : items) {
    MultiPoly base = build(item.base, v);
    if (!base.is_constant() && base.total_degree() != 1) {
      throw ParseError("factor base is neither an integer nor linear", 0);
    }
    out.multiply(base, item.exponent);
  }
  return out;
}

json to_json(const MultiPoly& f) {
  json terms = json::array();
  for (const Term& t : f.terms()) {
    terms.push_back(
        {{"exps", t.monomial.exponents(f.nvars())}, {"coeff", t.coeff.get_str()}});
  }
  return {{"nvars", f.nvars()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const json& j) {
  try {
    const int nvars = j.at("nvars").get<int>();
    std::vector<Term> terms;
    for (const json& t : j.at("terms")) {
      const auto exps = t.at("exps").get<std::vector<std::uint32_t>>();
      if (exps.size() != static_cast<std::size_t>(nvars)) {
        throw std::invalid_argument("exponent vector length != nvars");
      }
      terms.push_back({Monomial(exps), BigInt(t.at("coeff").get<std::string>())});
    }
    return MultiPoly::from_terms(nvars, std::move(terms));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") +
                                e.what());
  }
}

json to_json(const FactoredForm& f) {
  json factors = json::array();
  for (const Factor& factor : f.factors()) {
    json exp = factor.exponent.fits_ulong_p()
                   ? json(factor.exponent.get_ui())
                   : json(factor.exponent.get_str());
    factors.push_back({{"base", to_json(factor.base)}, {"exp", std::move(exp)}});
  }
  return {{"constant", f.constant().get_str()}, {"factors", std::move(factors)}};
}

FactoredForm factored_from_json(const json& j) {
  try {
    const json& factors = j.at("factors");
    int nvars = 0;
    if (!factors.empty()) nvars = factors.front().at("base").at("nvars").get<int>();
    FactoredForm out(nvars, BigInt(j.at("constant").get<std::string>()));
    for (const json& item : factors) {
      const json& e = item.at("exp");
      const BigInt exponent = e.is_string() ? BigInt(e.get<std::string>())
                                            : BigInt(e.get<unsigned long>());
      out.multiply(poly_from_json(item.at("base")), exponent);
    }
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed factored-form JSON: ") +
                                e.what());
  }
}

}  // namespace compdet
