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

#include "logdiff/exprparse.hpp"
#include "logdiff/sampling.hpp"

namespace logdiff {
namespace {

TEST(Parse, Examples) {
  const DiffOp u = parse_diffop("x^2*d1^2 - x*d1", 1);
  DiffOp expected(1);
  expected.add_term(Monomial({2}), Poly::term(Monomial({2}), 1));
  expected.add_term(Monomial({1}), Poly::term(Monomial({1}), -1));
  EXPECT_EQ(u, expected);

  DiffOp commuted(1);
  commuted.add_term(Monomial({1}), Poly::variable(1, 0));
  commuted.add_term(Monomial({0}), Poly::constant(1, 1));
  EXPECT_EQ(parse_diffop("d1*x", 1), commuted);

  const Poly cube = parse_poly("(x+y)^3", 2);
  EXPECT_EQ(cube.term_count(), 4u);
  EXPECT_EQ(cube.coefficient(Monomial({2, 1})), 3);
}

TEST(Parse, RationalLiteralsBindTightly) {
  EXPECT_EQ(parse_poly("1/2*x", 1), Poly::term(Monomial({1}), Rational(1, 2)));
  EXPECT_EQ(parse_poly("-3/6", 1), Poly::constant(1, Rational(-1, 2)));
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Parse, IndexedAndAliasedVariables) {
  EXPECT_EQ(parse_poly("x1*x4", 4), Poly::term(Monomial({1, 0, 0, 1}), 1));
  EXPECT_EQ(parse_poly("x*y*z", 3), parse_poly("x1*x2*x3", 3));
  EXPECT_THROW(parse_poly("y", 1), ParseError);
  EXPECT_THROW(parse_poly("x", 4), ParseError);
}

TEST(Parse, Errors) {
  auto position_of = [](const char* text, std::size_t l) -> std::size_t {
    try {
      parse_diffop(text, l);
    } catch (const ParseError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for " << text;
    return 0;
  };
  EXPECT_EQ(position_of("x1 + x3", 2), 5u);
  EXPECT_EQ(position_of("x^-1", 1), 2u);
  EXPECT_THROW(parse_diffop("x^2^3", 1), ParseError);
  EXPECT_THROW(parse_diffop("2 x", 1), ParseError);
  EXPECT_THROW(parse_diffop("(x + 1", 1), ParseError);
  EXPECT_THROW(parse_diffop("foo", 1), ParseError);
  EXPECT_THROW(parse_diffop("1/0", 1), ParseError);
  EXPECT_THROW(parse_diffop("", 1), ParseError);
  EXPECT_THROW(parse_poly("x*d1", 1), ParseError);
  EXPECT_THROW(parse_diffop("x", 0), std::invalid_argument);
}

TEST(Parse, AstKeepsStructure) {
  const ExprPtr e = parse_expr("d1*(x+1)", 1);
  ASSERT_TRUE(std::holds_alternative<BinaryNode>(e->node));
  EXPECT_EQ(evaluate_diffop(*e, 1), parse_diffop("x*d1 + d1 + 1", 1));
  EXPECT_THROW(evaluate_poly(*e, 1), ParseError);
}

TEST(Render, Examples) {
  const DiffOp u = parse_diffop("d1*x", 1);
  EXPECT_EQ(render(u), "x1*d1 + 1");
  EXPECT_EQ(render(u, RenderOptions{true}), "x*d1 + 1");
  EXPECT_EQ(render(DiffOp(2)), "0");
  EXPECT_EQ(render(Poly(2)), "0");
  EXPECT_EQ(render(parse_poly("y^2 - 3/2*x + x*y", 2)), "x1*x2 + x2^2 - 3/2*x1");
  EXPECT_EQ(render(parse_diffop("-d1^2*d2 + 2*x*d1", 2)), "-d1^2*d2 + 2*x1*d1");
  EXPECT_EQ(render(parse_rational("-4/6")), "-2/3");
}

TEST(Render, RoundTripsRandomOperators) {
  Sampler rng(61);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t l = static_cast<std::size_t>(rng.integer(1, 4));
    DiffOp u = rng.diffop(l, 3, 3, 4);
    if (trial % 3 == 0) {
      Rational c(rng.integer(1, 9), rng.integer(1, 9));
      c.canonicalize();
      u *= c;
    }
    const bool aliases = rng.coin();
    const std::string text = render(u, RenderOptions{aliases});
    ASSERT_EQ(parse_diffop(text, l), u) << text;
    const Poly f = rng.poly(l, 3, 4);
    ASSERT_EQ(parse_poly(render(f, RenderOptions{aliases}), l), f);
  }
}

}  // namespace
}  // namespace logdiff
