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

// Matrices over Q or over the polynomial ring: determinants, permanents, and
// the symmetric-power matrix M^(p) indexed by weakly increasing tuples.

#include <cstddef>
#include <vector>

#include "logdiff/matrix.hpp"
#include "logdiff/polyring.hpp"

namespace logdiff {

// A weakly increasing tuple (i1 <= ... <= ip) with entries in 1..l.
class WpIndex {
 public:
  WpIndex() = default;
  // Throws std::invalid_argument unless entries are weakly increasing and >= 1.
  explicit WpIndex(std::vector<unsigned> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<unsigned>& entries() const noexcept { return entries_; }
  unsigned operator[](std::size_t a) const { return entries_[a]; }

  // i'_j = number of occurrences of j, for j = 1..l (returned 0-based).
  std::vector<unsigned> multiplicities(std::size_t l) const;
  // i'! = i'_1! ... i'_l!
  Integer multiplicity_factorial(std::size_t l) const;
  // The same multiset as a d-exponent vector of length l.
  Monomial as_exponent(std::size_t l) const;

  friend auto operator<=>(const WpIndex&, const WpIndex&) = default;
  friend bool operator==(const WpIndex&, const WpIndex&) = default;

 private:
  std::vector<unsigned> entries_;
};

// All weakly increasing p-tuples over 1..l, lexicographically ascending.
std::vector<WpIndex> enumerate_wp(std::size_t l, unsigned p);

// gamma_{l,p} = product of i'! over W_p.
Integer gamma(std::size_t l, unsigned p);

// |W_p| choose-style exponent C(p + l - 1, l) that shows up in every
// determinant identity below.
unsigned sym_power_exponent(std::size_t l, unsigned p);

// Ring helpers for the two entry types used in this library.
Rational ring_one(const Rational& zero);
Poly ring_one(const Poly& zero);
bool ring_is_zero(const Rational& a);
bool ring_is_zero(const Poly& a);
// a / b where the quotient is known to be exact.
Rational ring_exact_quotient(const Rational& a, const Rational& b);
Poly ring_exact_quotient(const Poly& a, const Poly& b);

template <class T>
Matrix<T> identity_matrix(std::size_t n, const T& zero);

// Permanent by Laplace expansion; exponential but fine for n <= 4.
template <class T>
T permanent_expansion(const Matrix<T>& m);
// Ryser's formula with Gray-code subset order, O(2^n n) ring operations.
template <class T>
T permanent_ryser(const Matrix<T>& m);
// Dispatches on size: expansion for n <= 4, Ryser above.
template <class T>
T permanent(const Matrix<T>& m);

// Cofactor expansion along the first row.
template <class T>
T determinant_cofactor(const Matrix<T>& m);
// Fraction-free Bareiss elimination with row pivoting on nonzero entries.
template <class T>
T determinant_bareiss(const Matrix<T>& m);
// Dispatches on size: cofactor for n <= 4, Bareiss above.
template <class T>
T determinant(const Matrix<T>& m);

// M^(p): rows and columns indexed by enumerate_wp(l, p); entry (i, j) is the
// permanent of the p x p matrix (u_{i_a, j_b}).
template <class T>
Matrix<T> sym_power_matrix(const Matrix<T>& m, unsigned p);

// det M^(p) == gamma(l, p) * (det M)^C(p+l-1, l), checked exactly.
template <class T>
bool check_sym_power_det(const Matrix<T>& m, unsigned p);

// Matrix of the induced map on Sym^p: column j of M^(p) divided by j'!.
Matrix<Rational> rescaled_sym_power_matrix(const Matrix<Rational>& m, unsigned p);

inline constexpr std::size_t kPermanentExpansionMax = 4;
inline constexpr std::size_t kDeterminantCofactorMax = 4;

}  // namespace logdiff
