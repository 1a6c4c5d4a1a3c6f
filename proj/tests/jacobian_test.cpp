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

#include "logdiff/arrangement.hpp"
#include "logdiff/exprparse.hpp"
#include "logdiff/fixtures.hpp"
#include "logdiff/jacobian.hpp"
#include "logdiff/sampling.hpp"
#include "oracles.hpp"

namespace logdiff {
namespace {

DiffOp D(const char* text, std::size_t l = 1) { return parse_diffop(text, l); }
Poly P(const char* text, std::size_t l = 1) { return parse_poly(text, l); }

TEST(ThetaPower, Examples) {
  const std::vector<DiffOp> euler{D("x*d1")};
  const OpFamily f = theta_power_family(euler, 2);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.entries()[0], D("x^2*d1^2 + x*d1"));

  const std::vector<DiffOp> theta{D("x*d1 + y", 2), D("y^2*d2", 2)};
  const OpFamily one = theta_power_family(theta, 1);
  EXPECT_EQ(one.entries(), theta);

  const std::vector<DiffOp> partials{D("d1", 2), D("d2", 2)};
  EXPECT_EQ(theta_power_family(partials, 2).entries(),
            (std::vector<DiffOp>{D("d1^2", 2), D("d1*d2", 2), D("d2^2", 2)}));
  EXPECT_EQ(theta_power_family(partials, 0).entries(),
            (std::vector<DiffOp>{DiffOp(Poly::constant(2, 1))}));
}

TEST(OpFamily, IndexingAndValidation) {
  const std::vector<DiffOp> partials{D("d1", 2), D("d2", 2)};
  const OpFamily f = theta_power_family(partials, 2);
  EXPECT_EQ(f.at(WpIndex({1, 2})), D("d1*d2", 2));
  EXPECT_THROW(f.position(WpIndex({1, 3})), std::out_of_range);
  EXPECT_THROW(OpFamily(2, 2, {D("d1", 2)}), std::invalid_argument);
}

TEST(SubstituteEntry, Examples) {
  const std::vector<DiffOp> euler{D("x*d1")};
  const OpFamily f = theta_power_family(euler, 2);
  const WpIndex j({1, 1});
  EXPECT_EQ(substitute_entry(f, D("x^2*d1^2"), j).entries(),
            (std::vector<DiffOp>{D("x^2*d1^2")}));
  const OpFamily g = substitute_entry(f, D("d1^2 + x"), j);
  EXPECT_EQ(substitute_entry(g, f.at(j), j), f);
}

TEST(HigherJacobian, Examples) {
  const std::vector<Poly> xy = coordinates(2);
  const std::vector<DiffOp> partials{D("d1", 2), D("d2", 2)};
  EXPECT_EQ(higher_jacobian(xy, theta_power_family(partials, 1)), Poly::constant(2, 1));

  const std::vector<Poly> x = coordinates(1);
  const std::vector<DiffOp> euler{D("x*d1")};
  EXPECT_EQ(higher_jacobian(x, theta_power_family(euler, 2)), P("2*x^2"));

  // An entry of order below p contributes a zero row.
  const std::vector<DiffOp> boolean{D("x*d1", 2), D("y*d2", 2)};
  const OpFamily low = substitute_entry(theta_power_family(boolean, 2), D("x^5*d1 + y", 2),
                                        WpIndex({1, 2}));
  EXPECT_TRUE(higher_jacobian(xy, low).is_zero());
}

TEST(HigherJacobian, PowerIdentityExamples) {
  const std::vector<Poly> x = coordinates(1);
  const std::vector<DiffOp> euler{D("x*d1")};
  EXPECT_TRUE(jacobian_power_identity_check(x, euler, 2));

  const std::vector<Poly> xy = coordinates(2);
  const std::vector<DiffOp> boolean{D("x*d1", 2), D("y*d2", 2)};
  EXPECT_EQ(higher_jacobian(xy, theta_power_family(boolean, 2)), parse_poly("4*x^3*y^3", 2));
  EXPECT_TRUE(jacobian_power_identity_check(xy, boolean, 2));
  EXPECT_TRUE(jacobian_power_identity_check(xy, boolean, 1));

  const std::vector<DiffOp> second_order{D("d1^2", 2), D("y*d2", 2)};
  EXPECT_THROW(jacobian_power_identity_check(xy, second_order, 2), std::invalid_argument);
}

TEST(HigherJacobian, MatrixRowsAreIteratedCommutators) {
  Sampler rng(41);
  const std::vector<Poly> f{rng.poly(2, 2), rng.poly(2, 2)};
  const OpFamily u(2, 2, {rng.diffop(2, 2, 2), rng.diffop(2, 2, 2), rng.diffop(2, 2, 2)});
  const Matrix<Poly> m = jacobian_matrix(f, u);
  const auto idx = u.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const std::vector<Poly> fs{f[idx[j].entries()[0] - 1], f[idx[j].entries()[1] - 1]};
      EXPECT_EQ(m(i, j), oracle::subset_expansion(u.entries()[i], fs));
    }
  }
  EXPECT_EQ(higher_jacobian(f, u), oracle::leibniz_det(m));
}

TEST(HigherJacobian, LinearInEachEntry) {
  Sampler rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<DiffOp> entries;
    for (int k = 0; k < 3; ++k) entries.push_back(rng.diffop(2, 2, 1));
    const OpFamily u(2, 2, entries);
    const std::vector<Poly> f{rng.poly(2, 2), rng.poly(2, 2)};
    const WpIndex j = u.indices()[static_cast<std::size_t>(rng.integer(0, 2))];
    const DiffOp v = rng.diffop(2, 2, 1);
    const Poly a = rng.poly(2, 1);
    const Poly lhs = higher_jacobian(f, substitute_entry(u, u.at(j) + a * v, j));
    const Poly rhs = higher_jacobian(f, u) + a * higher_jacobian(f, substitute_entry(u, v, j));
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(HigherJacobian, LinearCoordinateChangeScalesByDeterminantPower) {
  Sampler rng(43);
  for (unsigned p = 1; p <= 3; ++p) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = rng.integer_matrix(2, -3, 3);
      std::vector<DiffOp> entries;
      for (std::size_t k = 0; k < enumerate_wp(2, p).size(); ++k) {
        entries.push_back(rng.diffop(2, p, 1));
      }
      const OpFamily u(2, p, entries);
      const std::vector<Poly> f{rng.poly(2, 2), rng.poly(2, 2)};
      const Poly scale = Poly::constant(2, determinant(a));
      ASSERT_EQ(higher_jacobian(apply_linear_map(a, f), u),
                pow(scale, sym_power_exponent(2, p)) * higher_jacobian(f, u));
    }
  }
}

TEST(HigherJacobian, PowerIdentityRandomOrderOneTuples) {
  Sampler rng(44);
  for (std::size_t l = 1; l <= 2; ++l) {
    for (unsigned p = 1; p <= 3; ++p) {
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<DiffOp> theta;
        std::vector<Poly> f;
        for (std::size_t i = 0; i < l; ++i) {
          theta.push_back(rng.order_one_op(l, 1));
          f.push_back(rng.poly(l, 2, 2));
        }
        ASSERT_TRUE(jacobian_power_identity_check(f, theta, p));
      }
    }
  }
}

TEST(PermanentExpansion, MatchesCommutatorValue) {
  Sampler rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t l = static_cast<std::size_t>(rng.integer(1, 2));
    const auto p = static_cast<unsigned>(rng.integer(1, 3));
    std::vector<DiffOp> word;
    std::vector<Poly> fs;
    DiffOp product(Poly::constant(l, 1));
    for (unsigned k = 0; k < p; ++k) {
      word.push_back(rng.derivation(l, 2).to_diffop());
      fs.push_back(rng.poly(l, 2));
      product = product * word.back();
    }
    ASSERT_EQ(derivation_word_permanent(word, fs), value_at_one(iterated_commutator(product, fs)));
  }
}

TEST(Divisibility, TangentFamiliesOverFixtures) {
  Sampler rng(46);
  for (const char* name : {"boolean2", "triple2", "quad2"}) {
    const Fixture fx = builtin_fixture(name);
    const Poly& q = fx.arrangement.defining_polynomial();
    for (unsigned p = 1; p <= 2; ++p) {
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<DiffOp> entries;
        for (std::size_t k = 0; k < enumerate_wp(2, p).size(); ++k) {
          DiffOp entry = rng.delta_element(fx.basis, p, 2);
          for (const WpIndex& idx : enumerate_wp(2, p)) {
            DiffOp word = rng.nonzero_poly(2, 2, 2);
            for (unsigned g : idx.entries()) word = word * fx.basis[g - 1].to_diffop();
            entry += word;
          }
          entries.push_back(entry);
        }
        const Poly jac = higher_jacobian(coordinates(2), OpFamily(2, p, entries));
        EXPECT_FALSE(jac.is_zero());
        ASSERT_TRUE(exact_divide(jac, pow(q, sym_power_exponent(2, p))).has_value()) << name;
      }
    }
  }
}

}  // namespace
}  // namespace logdiff
