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

#include <gtest/gtest.h>

#include <algorithm>

#include "logdiff/exprparse.hpp"
#include "logdiff/linalg.hpp"
#include "logdiff/sampling.hpp"
#include "oracles.hpp"

namespace logdiff {
namespace {

Matrix<Rational> Q(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix<Rational> m(rows.size(), rows.begin()->size(), 0);
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

std::vector<std::vector<unsigned>> as_vectors(const std::vector<WpIndex>& idx) {
  std::vector<std::vector<unsigned>> out;
  for (const WpIndex& w : idx) out.push_back(w.entries());
  return out;
}

TEST(EnumerateWp, Examples) {
  EXPECT_EQ(as_vectors(enumerate_wp(3, 2)),
            (std::vector<std::vector<unsigned>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}));
  EXPECT_EQ(as_vectors(enumerate_wp(1, 4)), (std::vector<std::vector<unsigned>>{{1, 1, 1, 1}}));
  EXPECT_EQ(as_vectors(enumerate_wp(2, 0)), (std::vector<std::vector<unsigned>>{{}}));
}

TEST(EnumerateWp, MatchesOdometerAndCount) {
  for (std::size_t l = 1; l <= 4; ++l) {
    for (unsigned p = 0; p <= 4; ++p) {
      const auto got = as_vectors(enumerate_wp(l, p));
      EXPECT_EQ(got, oracle::brute_wp(l, p)) << "l=" << l << " p=" << p;
      EXPECT_EQ(Integer(got.size()), binomial(p + l - 1, l - 1));
    }
  }
}

TEST(WpIndex, Multiplicities) {
  const WpIndex a({1, 1, 3});
  EXPECT_EQ(a.multiplicities(3), (std::vector<unsigned>{2, 0, 1}));
  EXPECT_EQ(a.multiplicity_factorial(3), 2);
  EXPECT_EQ(WpIndex({1, 2}).multiplicity_factorial(2), 1);
  EXPECT_EQ(WpIndex({2, 2, 2, 2}).multiplicities(2), (std::vector<unsigned>{0, 4}));
  EXPECT_EQ(WpIndex({2, 2, 2, 2}).multiplicity_factorial(2), 24);
  EXPECT_THROW(WpIndex({2, 1}), std::invalid_argument);
}

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma(1, 3), 6);
  EXPECT_EQ(gamma(2, 2), 4);
  for (std::size_t l = 1; l <= 4; ++l) EXPECT_EQ(gamma(l, 1), 1);
  EXPECT_EQ(sym_power_exponent(2, 2), 3u);
  EXPECT_EQ(sym_power_exponent(3, 0), 0u);
}

TEST(Permanent, Examples) {
  EXPECT_EQ(permanent(Q({{1, 2}, {3, 4}})), 10);
  EXPECT_EQ(permanent(identity_matrix<Rational>(6, 0)), 1);
  EXPECT_EQ(permanent(Q({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})), 6);
  EXPECT_EQ(permanent(Matrix<Rational>(0, 0, 0)), 1);
  EXPECT_THROW(permanent(Matrix<Rational>(2, 3, 0)), std::invalid_argument);
}

TEST(Permanent, RyserAgreesWithExpansionAndBruteForce) {
  Sampler rng(3);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto m = rng.integer_matrix(n, -4, 4);
      const Rational brute = oracle::brute_permanent(m);
      ASSERT_EQ(permanent_ryser(m), brute);
      ASSERT_EQ(permanent_expansion(m), brute);
      ASSERT_EQ(permanent(m), brute);
    }
  }
}

TEST(Determinant, Examples) {
  Matrix<Poly> m(2, 2, Poly(2));
  m(0, 0) = parse_poly("x", 2);
  m(0, 1) = parse_poly("x^2", 2);
  m(1, 0) = parse_poly("y", 2);
  m(1, 1) = parse_poly("-y^2", 2);
  EXPECT_EQ(determinant(m), parse_poly("-x*y^2 - x^2*y", 2));
  EXPECT_EQ(determinant(identity_matrix<Rational>(7, 0)), 1);
  EXPECT_EQ(determinant(Q({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}})), 0);
}

TEST(Determinant, CofactorBareissAndLeibnizAgree) {
  Sampler rng(4);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto m = rng.integer_matrix(n, -5, 5);
      const Rational ref = oracle::leibniz_det(m);
      ASSERT_EQ(determinant_bareiss(m), ref);
      ASSERT_EQ(determinant_cofactor(m), ref);
      ASSERT_EQ(determinant(m), ref);
    }
  }
}

TEST(Determinant, PolynomialBareissWithZeroPivots) {
  Sampler rng(6);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      Matrix<Poly> m(n, n, Poly(2));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          // Sparse entries force row swaps in the elimination.
          m(i, j) = rng.integer(0, 2) == 0 ? rng.poly(2, 2, 2) : Poly(2);
        }
      }
      ASSERT_EQ(determinant_bareiss(m), oracle::leibniz_det(m));
    }
  }
}

TEST(SymPower, Examples) {
  const auto m = Q({{2, 3}, {5, 7}});
  EXPECT_EQ(sym_power_matrix(m, 1), m);

  // diag(l, 1) with l = 5: diagonal 2*l^2, l, 2.
  const auto d = sym_power_matrix(Q({{5, 0}, {0, 1}}), 2);
  EXPECT_EQ(d, Q({{50, 0, 0}, {0, 5, 0}, {0, 0, 2}}));

  const auto shear = Q({{1, 1}, {0, 1}});
  EXPECT_EQ(determinant(sym_power_matrix(shear, 2)), 4);
  EXPECT_TRUE(check_sym_power_det(shear, 2));
  EXPECT_TRUE(check_sym_power_det(Q({{2, 0}, {0, 1}}), 2));
  EXPECT_EQ(determinant(sym_power_matrix(Q({{2, 0}, {0, 1}}), 2)), 32);
  EXPECT_TRUE(check_sym_power_det(Q({{1, 2}, {2, 4}}), 3));
  EXPECT_EQ(determinant(sym_power_matrix(Q({{1, 2}, {2, 4}}), 3)), 0);
}

TEST(SymPower, EntriesArePermanentsOfSubmatrices) {
  Sampler rng(8);
  const auto m = rng.integer_matrix(3, -3, 3);
  const auto idx = enumerate_wp(3, 2);
  const auto sp = sym_power_matrix(m, 2);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) {
      Matrix<Rational> sub(2, 2, 0);
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          sub(i, j) = m(idx[a].entries()[i] - 1, idx[b].entries()[j] - 1);
        }
      }
      EXPECT_EQ(sp(a, b), oracle::brute_permanent(sub));
    }
  }
}

TEST(SymPower, RescaledMatrixIsMultiplicative) {
  Sampler rng(9);
  for (std::size_t l = 1; l <= 3; ++l) {
    for (unsigned p = 0; p <= 3; ++p) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto a = rng.integer_matrix(l, -3, 3);
        const auto b = rng.integer_matrix(l, -3, 3);
        EXPECT_EQ(rescaled_sym_power_matrix(a * b, p),
                  rescaled_sym_power_matrix(a, p) * rescaled_sym_power_matrix(b, p));
      }
    }
  }
}

TEST(SymPower, DeterminantIndependentOfIndexOrdering) {
  Sampler rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = rng.integer_matrix(2, -4, 4);
    const auto sp = sym_power_matrix(m, 3);
    std::vector<std::size_t> perm(sp.rows());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::reverse(perm.begin(), perm.end());
    std::swap(perm[0], perm[1]);
    Matrix<Rational> reordered(sp.rows(), sp.cols(), 0);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = 0; j < perm.size(); ++j) reordered(i, j) = sp(perm[i], perm[j]);
    }
    EXPECT_EQ(determinant(reordered), determinant(sp));
  }
}

TEST(SymPower, PolynomialEntries) {
  Matrix<Poly> m(2, 2, Poly(2));
  m(0, 0) = parse_poly("x", 2);
  m(0, 1) = parse_poly("y^2", 2);
  m(1, 0) = parse_poly("x+y", 2);
  m(1, 1) = parse_poly("-y", 2);
  for (unsigned p = 0; p <= 3; ++p) EXPECT_TRUE(check_sym_power_det(m, p));
}

}  // namespace
}  // namespace logdiff
