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

#include "logdiff/weyl.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace logdiff {

namespace {

// Visits every gamma <= beta componentwise.
template <class F>
void for_each_submultiindex(const Monomial& beta, F&& visit) {
  Monomial gamma(beta.nvars());
  while (true) {
    visit(static_cast<const Monomial&>(gamma));
    std::size_t i = 0;
    while (i < beta.nvars() && gamma[i] == beta[i]) {
      gamma[i] = 0;
      ++i;
    }
    if (i == beta.nvars()) return;
    ++gamma[i];
  }
}

Integer multi_binomial(const Monomial& beta, const Monomial& gamma) {
  Integer out = 1;
  for (std::size_t i = 0; i < beta.nvars(); ++i) out *= binomial(beta[i], gamma[i]);
  return out;
}

}  // namespace

DiffOp::DiffOp(const Poly& f) : nvars_(f.nvars()) {
  if (!f.is_zero()) terms_.emplace(Monomial(nvars_), f);
}

DiffOp DiffOp::partial(std::size_t nvars, std::size_t var, unsigned power) {
  return term(Poly::constant(nvars, 1), Monomial::unit(nvars, var, power));
}

DiffOp DiffOp::term(const Poly& coeff, const Monomial& beta) {
  DiffOp u(coeff.nvars());
  u.add_term(beta, coeff);
  return u;
}

Poly DiffOp::coefficient(const Monomial& beta) const {
  auto it = terms_.find(beta);
  return it == terms_.end() ? Poly(nvars_) : it->second;
}

Poly DiffOp::polynomial_part() const { return coefficient(Monomial(nvars_)); }

Order DiffOp::order() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

void DiffOp::add_term(const Monomial& beta, const Poly& coeff) {
  if (beta.nvars() != nvars_) throw DimensionMismatch(nvars_, beta.nvars());
  if (coeff.nvars() != nvars_) throw DimensionMismatch(nvars_, coeff.nvars());
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(beta, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DiffOp::check_same_ring(const DiffOp& other) const {
  if (other.nvars_ != nvars_) throw DimensionMismatch(nvars_, other.nvars_);
}

DiffOp& DiffOp::operator+=(const DiffOp& rhs) {
  check_same_ring(rhs);
  for (const auto& [beta, f] : rhs.terms_) add_term(beta, f);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& rhs) {
  check_same_ring(rhs);
  for (const auto& [beta, f] : rhs.terms_) add_term(beta, -f);
  return *this;
}

DiffOp& DiffOp::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [beta, f] : terms_) f *= c;
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp out(*this);
  for (auto& [beta, f] : out.terms_) f = -f;
  return out;
}

DiffOp operator*(const DiffOp& u, const DiffOp& v) {
  u.check_same_ring(v);
  // (f d^a)(g d^b) = sum_{c <= a} C(a, c) f d^c(g) d^{a - c + b}
  DiffOp out(u.nvars_);
  for (const auto& [alpha, f] : u.terms_) {
    for (const auto& [beta, g] : v.terms_) {
      for_each_submultiindex(alpha, [&](const Monomial& gamma) {
        Poly dg = g.derivative(gamma);
        if (dg.is_zero()) return;
        Poly coeff = f * dg;
        coeff *= Rational(multi_binomial(alpha, gamma));
        out.add_term((alpha / gamma) * beta, coeff);
      });
    }
  }
  return out;
}

DiffOp operator*(const Poly& a, const DiffOp& u) {
  if (a.nvars() != u.nvars_) throw DimensionMismatch(u.nvars_, a.nvars());
  DiffOp out(u.nvars_);
  if (a.is_zero()) return out;
  for (const auto& [beta, f] : u.terms_) out.add_term(beta, a * f);
  return out;
}

// ---------------------------------------------------------------------------
// Derivation

Derivation::Derivation(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
  for (const Poly& c : coeffs_) {
    if (c.nvars() != coeffs_.size()) throw DimensionMismatch(coeffs_.size(), c.nvars());
  }
}

bool Derivation::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Poly& c) { return c.is_zero(); });
}

std::optional<unsigned> Derivation::homogeneous_degree() const {
  std::optional<unsigned> deg;
  for (const Poly& c : coeffs_) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) return std::nullopt;
    if (deg && *deg != *c.degree()) return std::nullopt;
    deg = c.degree();
  }
  return deg;
}

Poly Derivation::operator()(const Poly& f) const {
  if (f.nvars() != nvars()) throw DimensionMismatch(nvars(), f.nvars());
  Poly out(nvars());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) out += coeffs_[i] * f.derivative(i);
  }
  return out;
}

DiffOp Derivation::to_diffop() const {
  DiffOp u(nvars());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    u.add_term(Monomial::unit(nvars(), i), coeffs_[i]);
  }
  return u;
}

std::optional<Derivation> Derivation::from_diffop(const DiffOp& u) {
  std::vector<Poly> coeffs(u.nvars(), Poly(u.nvars()));
  for (const auto& [beta, f] : u.terms()) {
    if (beta.degree() != 1) return std::nullopt;
    const auto it = std::find(beta.exponents().begin(), beta.exponents().end(), 1u);
    coeffs[static_cast<std::size_t>(it - beta.exponents().begin())] = f;
  }
  return Derivation(std::move(coeffs));
}

// ---------------------------------------------------------------------------

DiffOp commutator(const DiffOp& u, const DiffOp& v) { return u * v - v * u; }

DiffOp bracket(const DiffOp& u, const Poly& f) {
  if (f.nvars() != u.nvars()) throw DimensionMismatch(u.nvars(), f.nvars());
  // u f - f u keeps only the Leibniz terms with gamma != 0.
  DiffOp out(u.nvars());
  for (const auto& [beta, coeff] : u.terms()) {
    for_each_submultiindex(beta, [&](const Monomial& gamma) {
      if (gamma.is_one()) return;
      Poly df = f.derivative(gamma);
      if (df.is_zero()) return;
      Poly c = coeff * df;
      c *= Rational(multi_binomial(beta, gamma));
      out.add_term(beta / gamma, c);
    });
  }
  return out;
}

DiffOp iterated_commutator(const DiffOp& u, std::span<const Poly> fs) {
  DiffOp acc = u;
  for (const Poly& f : fs) {
    if (acc.is_zero()) break;
    acc = bracket(acc, f);
  }
  return acc;
}

Poly apply(const DiffOp& u, const Poly& f) {
  if (f.nvars() != u.nvars()) throw DimensionMismatch(u.nvars(), f.nvars());
  Poly out(u.nvars());
  for (const auto& [beta, coeff] : u.terms()) {
    Poly df = f.derivative(beta);
    if (!df.is_zero()) out += coeff * df;
  }
  return out;
}

Poly value_at_one(const DiffOp& u) { return u.polynomial_part(); }

Poly value_at_one_expansion(const DiffOp& u, std::span<const Poly> fs) {
  const std::size_t p = fs.size();
  if (p >= 63) throw std::invalid_argument("value_at_one_expansion: too many factors");
  Poly total(u.nvars());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
    Poly inside = Poly::constant(u.nvars(), 1);
    Poly outside = Poly::constant(u.nvars(), 1);
    unsigned picked = 0;
    for (std::size_t j = 0; j < p; ++j) {
      if (mask & (std::uint64_t{1} << j)) {
        outside *= fs[j];
        ++picked;
      } else {
        inside *= fs[j];
      }
    }
    Poly summand = outside * apply(u, inside);
    if (picked % 2 == 1) {
      total -= summand;
    } else {
      total += summand;
    }
  }
  return total;
}

Order order(const DiffOp& u) { return u.order(); }

Poly principal_symbol(const DiffOp& u) {
  const Order top = u.order();
  if (!top) throw std::domain_error("principal symbol of the zero operator");
  const std::size_t l = u.nvars();
  Poly symbol(2 * l);
  for (const auto& [beta, coeff] : u.terms()) {
    if (beta.degree() != *top) continue;
    for (const auto& [m, c] : coeff.terms()) {
      std::vector<unsigned> e = m.exponents();
      e.insert(e.end(), beta.exponents().begin(), beta.exponents().end());
      symbol.add_term(Monomial(std::move(e)), c);
    }
  }
  return symbol;
}

bool in_right_ideal(const DiffOp& u, const Poly& f, unsigned t) {
  if (f.is_zero()) throw std::domain_error("in_right_ideal: f must be nonzero");
  if (t == 0) return true;
  const Poly ft = pow(f, t);
  return std::all_of(u.terms().begin(), u.terms().end(), [&](const auto& term) {
    return exact_divide(term.second, ft).has_value();
  });
}

}  // namespace logdiff
