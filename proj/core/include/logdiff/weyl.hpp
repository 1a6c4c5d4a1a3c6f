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

// The Weyl algebra Diff(S) in characteristic zero. Operators are stored in
// normal form sum_beta f_beta d^beta with polynomial coefficients on the left.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "logdiff/polyring.hpp"

namespace logdiff {

// Order of an operator; nullopt is the order of 0.
using Order = std::optional<unsigned>;

class DiffOp {
 public:
  // Keyed by the d-exponent beta.
  using TermMap = std::map<Monomial, Poly, GrlexDescending>;

  DiffOp() = default;
  explicit DiffOp(std::size_t nvars) : nvars_(nvars) {}
  // Multiplication by f, an operator of order 0 (or 0 when f is zero).
  DiffOp(const Poly& f);  // NOLINT(google-explicit-constructor)

  static DiffOp partial(std::size_t nvars, std::size_t var, unsigned power = 1);
  static DiffOp term(const Poly& coeff, const Monomial& beta);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }
  Poly coefficient(const Monomial& beta) const;
  // The beta = 0 coefficient, which is also u(1).
  Poly polynomial_part() const;
  Order order() const;

  void add_term(const Monomial& beta, const Poly& coeff);

  DiffOp& operator+=(const DiffOp& rhs);
  DiffOp& operator-=(const DiffOp& rhs);
  DiffOp& operator*=(const Rational& c);
  DiffOp operator-() const;

  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  // Composition u*v, normal-ordered by the generalized Leibniz rule.
  friend DiffOp operator*(const DiffOp& u, const DiffOp& v);
  // Left multiplication by a polynomial.
  friend DiffOp operator*(const Poly& a, const DiffOp& u);
  friend DiffOp operator*(const Rational& c, DiffOp u) { return u *= c; }
  friend bool operator==(const DiffOp&, const DiffOp&) = default;

 private:
  void check_same_ring(const DiffOp& other) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

// A derivation sum_i c_i d_i, stored by its coefficient tuple.
class Derivation {
 public:
  explicit Derivation(std::vector<Poly> coeffs);

  std::size_t nvars() const noexcept { return coeffs_.size(); }
  const std::vector<Poly>& coeffs() const noexcept { return coeffs_; }
  const Poly& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;
  // Common degree of the nonzero coefficients if they share one.
  std::optional<unsigned> homogeneous_degree() const;

  Poly operator()(const Poly& f) const;
  DiffOp to_diffop() const;

  // Interprets an operator as a derivation; nullopt unless every term has
  // |beta| = 1.
  static std::optional<Derivation> from_diffop(const DiffOp& u);

  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  std::vector<Poly> coeffs_;
};

DiffOp commutator(const DiffOp& u, const DiffOp& v);
// [u, f] for a polynomial f, computed directly from the Leibniz rule.
DiffOp bracket(const DiffOp& u, const Poly& f);
// [u, f1, ..., fp] = [[u, f1, ..., f_{p-1}], fp]; returns u for an empty list.
DiffOp iterated_commutator(const DiffOp& u, std::span<const Poly> fs);

Poly apply(const DiffOp& u, const Poly& f);
Poly value_at_one(const DiffOp& u);

// Inclusion-exclusion form of [u, f1, ..., fp](1):
//   sum_{J} (-1)^{|J|} prod_{j in J} f_j * u(prod_{k not in J} f_k).
Poly value_at_one_expansion(const DiffOp& u, std::span<const Poly> fs);

Order order(const DiffOp& u);

// sigma(u) as a polynomial in 2l variables x1..xl, xi1..xil. Throws
// std::domain_error on the zero operator.
Poly principal_symbol(const DiffOp& u);

// u in f^t Diff(S), i.e. f^t divides every normal-form coefficient.
bool in_right_ideal(const DiffOp& u, const Poly& f, unsigned t);

}  // namespace logdiff
