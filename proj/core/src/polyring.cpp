// Copyright 2026 The logdiff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "logdiff/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace logdiff {

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t actual)
    : std::invalid_argument("ambient dimension mismatch: expected " +
                            std::to_string(expected) + ", got " +
                            std::to_string(actual)) {}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::unit(std::size_t nvars, std::size_t var, unsigned power) {
  Monomial m(nvars);
  m.exps_.at(var) = power;
  return m;
}

unsigned Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](unsigned e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (other.nvars() != nvars()) throw DimensionMismatch(nvars(), other.nvars());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.nvars() != nvars()) throw DimensionMismatch(nvars(), other.nvars());
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) {
    throw std::domain_error("monomial quotient is not a monomial");
  }
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= other.exps_[i];
  return out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Lexicographic with x1 most significant: larger leading exponent wins.
  return a.exponents() <=> b.exponents();
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  return grlex_compare(a, b) > 0;
}

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw std::out_of_range("variable index out of range");
  Poly p(nvars);
  p.add_term(Monomial::unit(nvars, var), 1);
  return p;
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p(m.nvars());
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

Degree Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw DimensionMismatch(nvars_, m.nvars());
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Poly::check_same_ring(const Poly& other) const {
  if (other.nvars_ != nvars_) throw DimensionMismatch(nvars_, other.nvars_);
}

Poly& Poly::operator+=(const Poly& rhs) {
  check_same_ring(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  check_same_ring(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_ring(b);
  Poly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::derivative(std::size_t var) const {
  return derivative(Monomial::unit(nvars_, var));
}

Poly Poly::derivative(const Monomial& beta) const {
  if (beta.nvars() != nvars_) throw DimensionMismatch(nvars_, beta.nvars());
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (!beta.divides(m)) continue;
    Integer falling = 1;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned k = 0; k < beta[i]; ++k) falling *= m[i] - k;
    }
    out.add_term(m / beta, c * Rational(falling));
  }
  return out;
}

Poly Poly::embed(std::size_t nvars) const {
  if (nvars < nvars_) throw DimensionMismatch(nvars_, nvars);
  Poly out(nvars);
  for (const auto& [m, c] : terms_) {
    std::vector<unsigned> e = m.exponents();
    e.resize(nvars, 0);
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = Poly::constant(base.nvars(), 1);
  Poly square = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent > 0) square *= square;
  }
  return result;
}

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.nvars() != b.nvars()) throw DimensionMismatch(a.nvars(), b.nvars());

  // Division by a single polynomial: {b} is a Groebner basis of (b), so the
  // remainder vanishes iff b | a, and a leading term that LT(b) does not
  // divide already proves non-divisibility.
  const Monomial& lead = b.leading_monomial();
  const Rational& lead_coeff = b.leading_coefficient();
  Poly quotient(a.nvars());
  Poly rest = a;
  while (!rest.is_zero()) {
    const Monomial& m = rest.leading_monomial();
    if (!lead.divides(m)) return std::nullopt;
    Poly step = Poly::term(m / lead, rest.leading_coefficient() / lead_coeff);
    rest -= step * b;
    quotient += step;
  }
  return quotient;
}

bool divides_power(const Poly& f, unsigned t, const Poly& a) {
  if (f.is_zero()) throw std::domain_error("divides_power: f must be nonzero");
  if (t == 0) return true;
  return exact_divide(a, pow(f, t)).has_value();
}

// ---------------------------------------------------------------------------
// LinearForm

LinearForm::LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("linear form needs at least one coordinate");
  if (std::all_of(coeffs_.begin(), coeffs_.end(),
                  [](const Rational& c) { return sgn(c) == 0; })) {
    throw std::invalid_argument("linear form must be nonzero");
  }
}

Poly LinearForm::to_poly() const {
  Poly p(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    p.add_term(Monomial::unit(coeffs_.size(), i), coeffs_[i]);
  }
  return p;
}

std::vector<Poly> apply_linear_map(const Matrix<Rational>& a,
                                   std::span<const Poly> f) {
  if (!a.is_square() || a.rows() != f.size()) {
    throw DimensionMismatch(f.size(), a.rows());
  }
  std::vector<Poly> out;
  out.reserve(f.size());
  for (std::size_t j = 0; j < a.rows(); ++j) {
    Poly acc(f.empty() ? 0 : f[0].nvars());
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(j, k) * f[k];
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<Poly> coordinates(std::size_t nvars) {
  std::vector<Poly> xs;
  xs.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) xs.push_back(Poly::variable(nvars, i));
  return xs;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace logdiff
