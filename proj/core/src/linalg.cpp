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

#include "logdiff/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace logdiff {

WpIndex::WpIndex(std::vector<unsigned> entries) : entries_(std::move(entries)) {
  for (std::size_t a = 0; a < entries_.size(); ++a) {
    if (entries_[a] == 0) throw std::invalid_argument("W_p entries are 1-based");
    if (a > 0 && entries_[a - 1] > entries_[a]) {
      throw std::invalid_argument("W_p entries must be weakly increasing");
    }
  }
}

std::vector<unsigned> WpIndex::multiplicities(std::size_t l) const {
  std::vector<unsigned> counts(l, 0);
  for (unsigned e : entries_) {
    if (e > l) throw std::out_of_range("W_p entry exceeds dimension");
    ++counts[e - 1];
  }
  return counts;
}

Integer WpIndex::multiplicity_factorial(std::size_t l) const {
  Integer out = 1;
  for (unsigned c : multiplicities(l)) out *= factorial(c);
  return out;
}

Monomial WpIndex::as_exponent(std::size_t l) const {
  return Monomial(multiplicities(l));
}

std::vector<WpIndex> enumerate_wp(std::size_t l, unsigned p) {
  if (l == 0) throw std::invalid_argument("enumerate_wp: dimension must be positive");
  std::vector<WpIndex> out;
  std::vector<unsigned> cur(p, 1);
  while (true) {
    out.emplace_back(cur);
    // Advance to the next weakly increasing tuple in lex order.
    std::size_t a = p;
    while (a > 0 && cur[a - 1] == l) --a;
    if (a == 0) break;
    unsigned v = cur[a - 1] + 1;
    for (std::size_t b = a - 1; b < p; ++b) cur[b] = v;
  }
  return out;
}

Integer gamma(std::size_t l, unsigned p) {
  Integer out = 1;
  for (const WpIndex& idx : enumerate_wp(l, p)) out *= idx.multiplicity_factorial(l);
  return out;
}

unsigned sym_power_exponent(std::size_t l, unsigned p) {
  return static_cast<unsigned>(
      binomial(p + static_cast<unsigned>(l) - 1, static_cast<unsigned>(l)).get_ui());
}

Rational ring_one(const Rational&) { return Rational(1); }
Poly ring_one(const Poly& zero) { return Poly::constant(zero.nvars(), 1); }
bool ring_is_zero(const Rational& a) { return sgn(a) == 0; }
bool ring_is_zero(const Poly& a) { return a.is_zero(); }
Rational ring_exact_quotient(const Rational& a, const Rational& b) { return a / b; }
Poly ring_exact_quotient(const Poly& a, const Poly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::logic_error("Bareiss step: inexact polynomial division");
  return *std::move(q);
}

namespace {

template <class T>
void require_square(const Matrix<T>& m, const char* what) {
  if (!m.is_square()) {
    throw std::invalid_argument(std::string(what) + ": matrix is not square");
  }
}

template <class T>
Matrix<T> minor_matrix(const Matrix<T>& m, std::size_t row, std::size_t col) {
  const std::size_t n = m.rows();
  Matrix<T> out(n - 1, n - 1, m.zero());
  for (std::size_t r = 0, rr = 0; r < n; ++r) {
    if (r == row) continue;
    for (std::size_t c = 0, cc = 0; c < n; ++c) {
      if (c == col) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

template <class T>
T laplace(const Matrix<T>& m, bool alternate) {
  const std::size_t n = m.rows();
  if (n == 0) return ring_one(m.zero());
  if (n == 1) return m(0, 0);
  if (n == 2) {
    T diag = m(0, 0) * m(1, 1);
    T anti = m(0, 1) * m(1, 0);
    if (alternate) return T(diag - anti);
    return T(diag + anti);
  }
  T acc = m.zero();
  for (std::size_t c = 0; c < n; ++c) {
    if (ring_is_zero(m(0, c))) continue;
    T term = m(0, c) * laplace(minor_matrix(m, 0, c), alternate);
    if (alternate && (c % 2 == 1)) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return acc;
}

}  // namespace

template <class T>
Matrix<T> identity_matrix(std::size_t n, const T& zero) {
  Matrix<T> out(n, n, zero);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = ring_one(zero);
  return out;
}

template <class T>
T permanent_expansion(const Matrix<T>& m) {
  require_square(m, "permanent");
  return laplace(m, false);
}

template <class T>
T permanent_ryser(const Matrix<T>& m) {
  require_square(m, "permanent");
  const std::size_t n = m.rows();
  if (n == 0) return ring_one(m.zero());
  if (n >= 63) throw std::invalid_argument("permanent: matrix too large for Ryser");

  // perm(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij, visiting the
  // subsets S in Gray-code order so each step toggles one column.
  std::vector<T> row_sums(n, m.zero());
  T total = m.zero();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const auto col = static_cast<std::size_t>(std::countr_zero(k));
    const std::uint64_t bit = std::uint64_t{1} << col;
    gray ^= bit;
    const bool added = (gray & bit) != 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) {
        row_sums[i] += m(i, col);
      } else {
        row_sums[i] -= m(i, col);
      }
    }
    T prod = row_sums[0];
    for (std::size_t i = 1; i < n && !ring_is_zero(prod); ++i) prod *= row_sums[i];
    const bool negative = ((n - static_cast<std::size_t>(std::popcount(gray))) % 2) == 1;
    if (negative) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return total;
}

template <class T>
T permanent(const Matrix<T>& m) {
  require_square(m, "permanent");
  return m.rows() <= kPermanentExpansionMax ? permanent_expansion(m)
                                            : permanent_ryser(m);
}

template <class T>
T determinant_cofactor(const Matrix<T>& m) {
  require_square(m, "determinant");
  return laplace(m, true);
}

template <class T>
T determinant_bareiss(const Matrix<T>& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return ring_one(m.zero());

  Matrix<T> a = m;
  T previous = ring_one(m.zero());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring_is_zero(a(k, k))) {
      std::size_t pivot = k + 1;
      while (pivot < n && ring_is_zero(a(pivot, k))) ++pivot;
      if (pivot == n) return m.zero();
      a.swap_rows(k, pivot);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T numer = a(i, j) * a(k, k);
        numer -= a(i, k) * a(k, j);
        a(i, j) = ring_exact_quotient(numer, previous);
      }
      a(i, k) = m.zero();
    }
    previous = a(k, k);
  }
  T det = a(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

template <class T>
T determinant(const Matrix<T>& m) {
  require_square(m, "determinant");
  return m.rows() <= kDeterminantCofactorMax ? determinant_cofactor(m)
                                             : determinant_bareiss(m);
}

template <class T>
Matrix<T> sym_power_matrix(const Matrix<T>& m, unsigned p) {
  require_square(m, "sym_power_matrix");
  const std::size_t l = m.rows();
  const std::vector<WpIndex> wp = enumerate_wp(l, p);
  Matrix<T> out(wp.size(), wp.size(), m.zero());
  Matrix<T> block(p, p, m.zero());
  for (std::size_t r = 0; r < wp.size(); ++r) {
    for (std::size_t c = 0; c < wp.size(); ++c) {
      for (unsigned a = 0; a < p; ++a) {
        for (unsigned b = 0; b < p; ++b) {
          block(a, b) = m(wp[r][a] - 1, wp[c][b] - 1);
        }
      }
      out(r, c) = permanent(block);
    }
  }
  return out;
}

template <class T>
bool check_sym_power_det(const Matrix<T>& m, unsigned p) {
  require_square(m, "check_sym_power_det");
  const std::size_t l = m.rows();
  const T lhs = determinant(sym_power_matrix(m, p));
  T base = determinant(m);
  T rhs = ring_one(m.zero());
  for (unsigned e = sym_power_exponent(l, p); e > 0; --e) rhs *= base;
  rhs *= Rational(gamma(l, p));
  return lhs == rhs;
}

Matrix<Rational> rescaled_sym_power_matrix(const Matrix<Rational>& m, unsigned p) {
  Matrix<Rational> out = sym_power_matrix(m, p);
  const std::vector<WpIndex> wp = enumerate_wp(m.rows(), p);
  for (std::size_t c = 0; c < wp.size(); ++c) {
    const Rational scale(wp[c].multiplicity_factorial(m.rows()));
    for (std::size_t r = 0; r < wp.size(); ++r) out(r, c) /= scale;
  }
  return out;
}

#define LOGDIFF_INSTANTIATE_LINALG(T)                              \
  template Matrix<T> identity_matrix<T>(std::size_t, const T&);    \
  template T permanent_expansion<T>(const Matrix<T>&);             \
  template T permanent_ryser<T>(const Matrix<T>&);                 \
  template T permanent<T>(const Matrix<T>&);                       \
  template T determinant_cofactor<T>(const Matrix<T>&);            \
  template T determinant_bareiss<T>(const Matrix<T>&);             \
  template T determinant<T>(const Matrix<T>&);                     \
  template Matrix<T> sym_power_matrix<T>(const Matrix<T>&, unsigned); \
  template bool check_sym_power_det<T>(const Matrix<T>&, unsigned);

LOGDIFF_INSTANTIATE_LINALG(Rational)
LOGDIFF_INSTANTIATE_LINALG(Poly)

#undef LOGDIFF_INSTANTIATE_LINALG

}  // namespace logdiff
