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

#pragma once

// Exact polynomial arithmetic over Q in a fixed number of positional
// variables x1..xl. Variables are 0-based in this API; the text grammar and
// the CLI use 1-based names.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "logdiff/matrix.hpp"

namespace logdiff {

using Rational = mpq_class;
using Integer = mpz_class;

// Degree of a polynomial; nullopt stands for the degree of 0.
using Degree = std::optional<unsigned>;

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual);
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<unsigned> exps) : exps_(exps) {}

  static Monomial unit(std::size_t nvars, std::size_t var, unsigned power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exponents() const noexcept { return exps_; }
  unsigned degree() const noexcept;
  bool is_one() const noexcept;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divides(other) == true.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exps_;
};

// Graded lexicographic order with x1 > x2 > ... ; used descending so that map
// iteration yields terms in canonical print order.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t var);
  static Poly term(const Monomial& m, const Rational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Constant term if the polynomial is a constant, nullopt otherwise.
  std::optional<Rational> constant_value() const;
  Degree degree() const;
  // True for 0 and for polynomials whose terms share one total degree.
  bool is_homogeneous() const;
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  // Largest monomial in grlex order; throws on the zero polynomial.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  // Adds c*m to this polynomial, keeping the term map canonical.
  void add_term(const Monomial& m, const Rational& c);

  Poly derivative(std::size_t var) const;
  // Applies d^beta, beta a multi-index of length nvars().
  Poly derivative(const Monomial& beta) const;

  // Same polynomial read in a larger ring; new variables are appended.
  Poly embed(std::size_t nvars) const;

 private:
  void check_same_ring(const Poly& other) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

Poly pow(const Poly& base, unsigned exponent);

// Returns q with a = b*q, or nullopt if b does not divide a.
// Throws std::domain_error if b is zero.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

// True iff f^t divides a. f must be nonzero.
bool divides_power(const Poly& f, unsigned t, const Poly& a);

// A nonzero element of V*, stored by its coordinates.
class LinearForm {
 public:
  explicit LinearForm(std::vector<Rational> coeffs);

  std::size_t nvars() const noexcept { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Poly to_poly() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// Component j of the result is sum_k a(j, k) * f[k].
std::vector<Poly> apply_linear_map(const Matrix<Rational>& a,
                                   std::span<const Poly> f);

// Coordinate functions (x1, ..., xl).
std::vector<Poly> coordinates(std::size_t nvars);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace logdiff
