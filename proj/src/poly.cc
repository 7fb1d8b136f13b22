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

#include "compdet/poly.h"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "compdet/errors.h"

namespace compdet {
namespace {

void require_same_nvars(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("variable-count mismatch: " +
                                std::to_string(a.nvars()) + " vs " +
                                std::to_string(b.nvars()));
  }
}

void require_product_degree(const MultiPoly& a, const MultiPoly& b) {
  if (a.total_degree() + b.total_degree() > Monomial::kMaxDegree) {
    throw std::overflow_error("polynomial product exceeds the degree limit");
  }
}

// Heap node for Johnson-style merging of term streams: the product of
// `outer[i]` with `inner[j]`.
struct HeapNode {
  Monomial key;
  std::uint32_t i;
  std::uint32_t j;
};

struct NodeLess {
  bool operator()(const HeapNode& a, const HeapNode& b) const {
    return a.key < b.key;
  }
};

std::uint32_t used_vars(const MultiPoly& f) {
  std::uint32_t mask = 0;
  for (const Term& t : f.terms()) {
    for (int v = 0; v < f.nvars(); ++v) {
      if (t.monomial.exponent(v) != 0) mask |= 1u << v;
    }
  }
  return mask;
}

// Coefficient of var^k, as a polynomial free of var.
MultiPoly coeff_in(const MultiPoly& f, int var, std::uint32_t k) {
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    if (t.monomial.exponent(var) == k) {
      terms.push_back({t.monomial.with_exponent(var, 0), t.coeff});
    }
  }
  return MultiPoly::from_terms(f.nvars(), std::move(terms));
}

MultiPoly normalize_sign(MultiPoly f) {
  if (!f.is_zero() && sgn(f.leading().coeff) < 0) return -f;
  return f;
}

MultiPoly content_in(const MultiPoly& f, int var) {
  MultiPoly g(f.nvars());
  const std::uint32_t deg = f.degree_in(var);
  for (std::uint32_t k = 0; k <= deg; ++k) {
    MultiPoly c = coeff_in(f, var, k);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  return g;
}

MultiPoly primitive_part(const MultiPoly& f, int var) {
  return exact_div(f, content_in(f, var));
}

// Pseudo-remainder of a by b with respect to var.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, int var) {
  const std::uint32_t db = b.degree_in(var);
  const MultiPoly lcb = coeff_in(b, var, db);
  MultiPoly r = a;
  long e = static_cast<long>(a.degree_in(var)) - db + 1;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const std::uint32_t dr = r.degree_in(var);
    const MultiPoly lead = coeff_in(r, var, dr);
    const MultiPoly shift = MultiPoly::from_terms(
        r.nvars(), {{Monomial::variable(var, dr - db), BigInt(1)}});
    r = lcb * r - lead * shift * b;
    --e;
  }
  if (e > 0) r *= pow(lcb, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::span<const std::uint32_t> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars)) {
    throw std::invalid_argument("monomial has more than " +
                                std::to_string(kMaxVars) + " variables");
  }
  std::uint64_t degree = 0;
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    degree += exponents[v];
    if (degree > kMaxDegree) {
      throw std::overflow_error("monomial degree exceeds the limit");
    }
    key_ |= static_cast<Key>(exponents[v]) << shift(static_cast<int>(v));
  }
  key_ |= static_cast<Key>(degree) << kDegreeShift;
}

Monomial Monomial::variable(int var, std::uint32_t exponent) {
  if (var < 0 || var >= kMaxVars) {
    throw std::invalid_argument("variable index out of range");
  }
  if (exponent > kMaxDegree) {
    throw std::overflow_error("monomial degree exceeds the limit");
  }
  return Monomial(static_cast<Key>(exponent) << shift(var) |
                  static_cast<Key>(exponent) << kDegreeShift);
}

std::uint32_t Monomial::exponent(int var) const {
  return static_cast<std::uint32_t>((key_ >> shift(var)) & kFieldMask);
}

std::uint32_t Monomial::degree() const {
  return static_cast<std::uint32_t>((key_ >> kDegreeShift) & kFieldMask);
}

std::vector<std::uint32_t> Monomial::exponents(int nvars) const {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(nvars));
  for (int v = 0; v < nvars; ++v) out[v] = exponent(v);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (int v = 0; v < kMaxVars; ++v) {
    if (exponent(v) > other.exponent(v)) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (degree() + other.degree() > kMaxDegree) {
    throw std::overflow_error("monomial degree exceeds the limit");
  }
  return Monomial(key_ + other.key_);
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  return Monomial(key_ - divisor.key_);
}

Monomial Monomial::with_exponent(int var, std::uint32_t e) const {
  const std::uint32_t old = exponent(var);
  if (degree() - old + e > kMaxDegree) {
    throw std::overflow_error("monomial degree exceeds the limit");
  }
  Key key = key_ & ~(kFieldMask << shift(var));
  key |= static_cast<Key>(e) << shift(var);
  key -= static_cast<Key>(old) << kDegreeShift;
  key += static_cast<Key>(e) << kDegreeShift;
  return Monomial(key);
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > Monomial::kMaxVars) {
    throw std::invalid_argument("unsupported variable count " +
                                std::to_string(nvars));
  }
}

MultiPoly::MultiPoly(int nvars, const BigInt& constant) : MultiPoly(nvars) {
  if (sgn(constant) != 0) terms_.push_back({Monomial(), constant});
}

MultiPoly MultiPoly::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) {
    throw std::invalid_argument("variable index out of range");
  }
  MultiPoly out(nvars);
  out.terms_.push_back({Monomial::variable(var), BigInt(1)});
  return out;
}

MultiPoly MultiPoly::linear(int nvars, int var, const BigInt& shift) {
  MultiPoly out = variable(nvars, var);
  if (sgn(shift) != 0) out.terms_.push_back({Monomial(), shift});
  return out;
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term> terms) {
  MultiPoly out(nvars);
  for (const Term& t : terms) {
    for (int v = nvars; v < Monomial::kMaxVars; ++v) {
      if (t.monomial.exponent(v) != 0) {
        throw std::invalid_argument("term uses a variable beyond nvars");
      }
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return a.monomial > b.monomial;
  });
  for (Term& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coeff += t.coeff;
      if (sgn(out.terms_.back().coeff) == 0) out.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.front().monomial.degree() == 0);
}

BigInt MultiPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("polynomial is not constant");
  return terms_.empty() ? BigInt(0) : terms_.front().coeff;
}

std::uint32_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::uint32_t MultiPoly::degree_in(int var) const {
  std::uint32_t deg = 0;
  for (const Term& t : terms_) deg = std::max(deg, t.monomial.exponent(var));
  return deg;
}

MultiPoly MultiPoly::with_nvars(int nvars) const {
  MultiPoly out(nvars);
  for (int v = nvars; v < nvars_; ++v) {
    if (degree_in(v) != 0) {
      throw std::invalid_argument("cannot drop a variable that is in use");
    }
  }
  out.terms_ = terms_;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_nvars(*this, other);
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    if (a->monomial > b->monomial) {
      merged.push_back(std::move(*a++));
    } else if (b->monomial > a->monomial) {
      merged.push_back(*b++);
    } else {
      a->coeff += b->coeff;
      if (sgn(a->coeff) != 0) merged.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) merged.push_back(std::move(*a));
  for (; b != other.terms_.end(); ++b) merged.push_back(*b);
  terms_ = std::move(merged);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  return *this += -other;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= scalar;
  return *this;
}

MultiPoly multiply_by_term(const MultiPoly& f, const Term& t) {
  MultiPoly out(f.nvars_);
  out.terms_.reserve(f.terms_.size());
  for (const Term& s : f.terms_) {
    out.terms_.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  }
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_nvars(a, b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.nvars());
  require_product_degree(a, b);
  if (a.size() == 1) return multiply_by_term(b, a.terms_.front());
  if (b.size() == 1) return multiply_by_term(a, b.terms_.front());

  const auto& outer = a.size() <= b.size() ? a.terms_ : b.terms_;
  const auto& inner = a.size() <= b.size() ? b.terms_ : a.terms_;

  // Stream i yields outer[i] * inner[0..]; stream i+1 is opened once
  // stream i has produced its first product.
  std::vector<HeapNode> heap;
  heap.reserve(outer.size());
  heap.push_back({outer[0].monomial * inner[0].monomial, 0, 0});

  MultiPoly out(a.nvars());
  BigInt acc;
  while (!heap.empty()) {
    const Monomial current = heap.front().key;
    acc = 0;
    while (!heap.empty() && heap.front().key == current) {
      std::pop_heap(heap.begin(), heap.end(), NodeLess{});
      const HeapNode node = heap.back();
      heap.pop_back();
      mpz_addmul(acc.get_mpz_t(), outer[node.i].coeff.get_mpz_t(),
                 inner[node.j].coeff.get_mpz_t());
      if (node.j == 0 && node.i + 1 < outer.size()) {
        heap.push_back({outer[node.i + 1].monomial * inner[0].monomial,
                        node.i + 1, 0});
        std::push_heap(heap.begin(), heap.end(), NodeLess{});
      }
      if (node.j + 1 < inner.size()) {
        heap.push_back({outer[node.i].monomial * inner[node.j + 1].monomial,
                        node.i, node.j + 1});
        std::push_heap(heap.begin(), heap.end(), NodeLess{});
      }
    }
    if (sgn(acc) != 0) out.terms_.push_back({current, acc});
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].monomial != b.terms_[k].monomial ||
        a.terms_[k].coeff != b.terms_[k].coeff) {
      return false;
    }
  }
  return true;
}

bool canonical_less(const MultiPoly& a, const MultiPoly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (ta[k].monomial != tb[k].monomial) {
      return ta[k].monomial > tb[k].monomial;
    }
    if (ta[k].coeff != tb[k].coeff) return ta[k].coeff < tb[k].coeff;
  }
  return ta.size() < tb.size();
}

MultiPoly pow(const MultiPoly& f, unsigned long e) {
  MultiPoly result(f.nvars(), 1);
  if (e == 0) return result;
  if (f.is_zero()) return f;
  if (f.size() == 1) {
    const Term& t = f.leading();
    if (static_cast<unsigned long>(t.monomial.degree()) * e >
        Monomial::kMaxDegree) {
      throw std::overflow_error("power exceeds the degree limit");
    }
    std::vector<std::uint32_t> exps = t.monomial.exponents(f.nvars());
    for (auto& x : exps) x *= static_cast<std::uint32_t>(e);
    BigInt c;
    mpz_pow_ui(c.get_mpz_t(), t.coeff.get_mpz_t(), e);
    return MultiPoly::from_terms(f.nvars(), {{Monomial(exps), c}});
  }
  MultiPoly base = f;
  while (true) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e == 0) break;
    base = base * base;
  }
  return result;
}

BigInt evaluate(const MultiPoly& f, std::span<const BigInt> point) {
  if (point.size() != static_cast<std::size_t>(f.nvars())) {
    throw std::invalid_argument("evaluation point has length " +
                                std::to_string(point.size()) + ", expected " +
                                std::to_string(f.nvars()));
  }
  BigInt total = 0;
  BigInt term;
  BigInt power;
  for (const Term& t : f.terms()) {
    term = t.coeff;
    for (int v = 0; v < f.nvars(); ++v) {
      const std::uint32_t e = t.monomial.exponent(v);
      if (e == 0) continue;
      mpz_pow_ui(power.get_mpz_t(), point[v].get_mpz_t(), e);
      term *= power;
    }
    total += term;
  }
  return total;
}

std::optional<MultiPoly> try_exact_div(const MultiPoly& f,
                                       const MultiPoly& g) {
  require_same_nvars(f, g);
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  MultiPoly q(f.nvars());
  if (f.is_zero()) return q;

  const auto& ft = f.terms();
  const auto& gt = g.terms();
  const Term& lead = gt.front();
  auto& qt = q.terms_;

  // Johnson division: the heap holds the pending streams q[i] * g[j], j >= 1.
  std::vector<HeapNode> heap;
  std::size_t next_f = 0;
  BigInt acc;
  while (next_f < ft.size() || !heap.empty()) {
    Monomial current;
    if (heap.empty() ||
        (next_f < ft.size() && ft[next_f].monomial >= heap.front().key)) {
      current = ft[next_f].monomial;
    } else {
      current = heap.front().key;
    }
    acc = 0;
    if (next_f < ft.size() && ft[next_f].monomial == current) {
      acc = ft[next_f].coeff;
      ++next_f;
    }
    while (!heap.empty() && heap.front().key == current) {
      std::pop_heap(heap.begin(), heap.end(), NodeLess{});
      const HeapNode node = heap.back();
      heap.pop_back();
      mpz_submul(acc.get_mpz_t(), qt[node.i].coeff.get_mpz_t(),
                 gt[node.j].coeff.get_mpz_t());
      if (node.j + 1 < gt.size()) {
        heap.push_back({qt[node.i].monomial * gt[node.j + 1].monomial,
                        node.i, node.j + 1});
        std::push_heap(heap.begin(), heap.end(), NodeLess{});
      }
    }
    if (sgn(acc) == 0) continue;
    if (!lead.monomial.divides(current) ||
        !mpz_divisible_p(acc.get_mpz_t(), lead.coeff.get_mpz_t())) {
      return std::nullopt;
    }
    BigInt c;
    mpz_divexact(c.get_mpz_t(), acc.get_mpz_t(), lead.coeff.get_mpz_t());
    qt.push_back({current / lead.monomial, std::move(c)});
    if (gt.size() > 1) {
      const auto i = static_cast<std::uint32_t>(qt.size() - 1);
      heap.push_back({qt[i].monomial * gt[1].monomial, i, 1});
      std::push_heap(heap.begin(), heap.end(), NodeLess{});
    }
  }
  return q;
}

MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g) {
  auto q = try_exact_div(f, g);
  if (!q) throw NotDivisible("polynomial division leaves a remainder");
  return *std::move(q);
}

MultiPoly substitute(const MultiPoly& f, std::span<const MultiPoly> images,
                     int nvars_out) {
  if (images.size() != static_cast<std::size_t>(f.nvars())) {
    throw std::invalid_argument("substitute: need one image per variable");
  }
  for (const MultiPoly& im : images) {
    if (im.nvars() != nvars_out) {
      throw std::invalid_argument("substitute: image variable-count mismatch");
    }
  }
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power_of = [&](int v, std::uint32_t e) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.emplace_back(nvars_out, 1);
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  MultiPoly out(nvars_out);
  for (const Term& t : f.terms()) {
    MultiPoly term(nvars_out, t.coeff);
    for (int v = 0; v < f.nvars(); ++v) {
      const std::uint32_t e = t.monomial.exponent(v);
      if (e != 0) term = term * power_of(v, e);
    }
    out += term;
  }
  return out;
}

MultiPoly shift_all_vars(const MultiPoly& f, const BigInt& c) {
  std::vector<MultiPoly> images;
  images.reserve(static_cast<std::size_t>(f.nvars()));
  for (int v = 0; v < f.nvars(); ++v) {
    images.push_back(MultiPoly::linear(f.nvars(), v, c));
  }
  return substitute(f, images, f.nvars());
}

namespace {

BigInt max_norm(const MultiPoly& f) {
  BigInt best = 0;
  for (const Term& t : f.terms()) {
    if (mpz_cmpabs(t.coeff.get_mpz_t(), best.get_mpz_t()) > 0) {
      best = abs(t.coeff);
    }
  }
  return best;
}

BigInt integer_content(const MultiPoly& f) {
  BigInt c = 0;
  for (const Term& t : f.terms()) {
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
    if (c == 1) break;
  }
  return c;
}

MultiPoly divide_coefficients(const MultiPoly& f, const BigInt& c) {
  std::vector<Term> terms = f.terms();
  for (Term& t : terms) {
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  }
  return MultiPoly::from_terms(f.nvars(), std::move(terms));
}

// f with x_var replaced by the integer xi (x_var no longer occurs).
MultiPoly eval_var(const MultiPoly& f, int var, const BigInt& xi) {
  std::vector<BigInt> powers{BigInt(1)};
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    const std::uint32_t e = t.monomial.exponent(var);
    while (powers.size() <= e) powers.push_back(powers.back() * xi);
    terms.push_back({t.monomial.with_exponent(var, 0), t.coeff * powers[e]});
  }
  return MultiPoly::from_terms(f.nvars(), std::move(terms));
}

// Inverse of eval_var for polynomials with coefficients below xi / 2:
// each coefficient is expanded in base xi with symmetric digits.
MultiPoly interpolate(const MultiPoly& h, int var, const BigInt& xi) {
  const BigInt half = xi / 2;
  std::vector<Term> terms;
  for (const Term& t : h.terms()) {
    BigInt c = t.coeff;
    std::uint32_t k = 0;
    while (sgn(c) != 0) {
      BigInt d;
      mpz_fdiv_r(d.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (d > half) d -= xi;
      if (sgn(d) != 0) {
        terms.push_back({t.monomial * Monomial::variable(var, k), d});
      }
      c -= d;
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      ++k;
    }
  }
  return MultiPoly::from_terms(h.nvars(), std::move(terms));
}

// Heuristic gcd: evaluate one variable at a large integer, recurse, and
// rebuild the candidate from its xi-adic expansion. The candidate is accepted
// only if it divides both inputs, which with xi > 2 min(|f|, |g|) + 1
// certifies it as the gcd. Returns nullopt when every attempt fails.
std::optional<MultiPoly> heuristic_gcd(const MultiPoly& f,
                                       const MultiPoly& g) {
  const std::uint32_t mask = used_vars(f) | used_vars(g);
  const BigInt cf = integer_content(f);
  const BigInt cg = integer_content(g);
  BigInt gc;
  mpz_gcd(gc.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  if (mask == 0) return MultiPoly(f.nvars(), gc);

  const MultiPoly pf = divide_coefficients(f, cf);
  const MultiPoly pg = divide_coefficients(g, cg);
  int var = 0;
  for (int v = 0; v < f.nvars(); ++v) {
    if ((mask >> v) & 1u) var = v;
  }
  BigInt xi = 2 * std::min(max_norm(pf), max_norm(pg)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const MultiPoly ef = eval_var(pf, var, xi);
    const MultiPoly eg = eval_var(pg, var, xi);
    if (!ef.is_zero() && !eg.is_zero()) {
      if (auto h = heuristic_gcd(ef, eg)) {
        MultiPoly candidate = interpolate(*h, var, xi);
        if (!candidate.is_zero()) {
          candidate = divide_coefficients(candidate, integer_content(candidate));
          if (try_exact_div(pf, candidate) && try_exact_div(pg, candidate)) {
            return candidate * gc;
          }
        }
      }
    }
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), xi.get_mpz_t());
    mpz_sqrt(root.get_mpz_t(), root.get_mpz_t());
    xi = xi * 73794 * root / 27011;
  }
  return std::nullopt;
}

MultiPoly gcd_prs(const MultiPoly& f, const MultiPoly& g);

}  // namespace

MultiPoly gcd(const MultiPoly& f, const MultiPoly& g) {
  require_same_nvars(f, g);
  if (f.is_zero()) return normalize_sign(g);
  if (g.is_zero()) return normalize_sign(f);
  if (auto h = heuristic_gcd(f, g)) return normalize_sign(std::move(*h));
  return gcd_prs(f, g);
}

namespace {

// Primitive polynomial remainder sequence, recursing on the variables that
// remain in the contents.
MultiPoly gcd_prs(const MultiPoly& f, const MultiPoly& g) {
  const std::uint32_t fmask = used_vars(f);
  const std::uint32_t gmask = used_vars(g);
  if ((fmask | gmask) == 0) {
    BigInt c;
    mpz_gcd(c.get_mpz_t(), f.constant_value().get_mpz_t(),
            g.constant_value().get_mpz_t());
    return MultiPoly(f.nvars(), c);
  }
  int var = 0;
  while (!(((fmask | gmask) >> var) & 1u)) ++var;
  if (!((fmask >> var) & 1u)) return gcd(f, content_in(g, var));
  if (!((gmask >> var) & 1u)) return gcd(content_in(f, var), g);

  const MultiPoly cf = content_in(f, var);
  const MultiPoly cg = content_in(g, var);
  MultiPoly a = exact_div(f, cf);
  MultiPoly b = exact_div(g, cg);
  const MultiPoly c = gcd(cf, cg);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (true) {
    MultiPoly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      b = MultiPoly(f.nvars(), 1);
      break;
    }
    a = std::move(b);
    b = primitive_part(r, var);
  }
  return normalize_sign(c * b);
}

}  // namespace
}  // namespace compdet
