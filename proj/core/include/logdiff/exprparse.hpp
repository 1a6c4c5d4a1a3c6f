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

// Text grammar for polynomials and differential operators.
//
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*' unary)*
//   unary := '-' unary | power
//   power := atom ('^' INTEGER)?
//   atom  := NUMBER | VARIABLE | PARTIAL | '(' expr ')'
//
// NUMBER is an integer or a rational literal "a/b" (a single token, so
// "1/2*x" is (1/2)*x). VARIABLE is x<k>, or x, y, z when l <= 3. PARTIAL is
// d<k>. '*' is mandatory and non-commutative: "d1*x1" is x1*d1 + 1.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "logdiff/polyring.hpp"
#include "logdiff/weyl.hpp"

namespace logdiff {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  // 0-based byte offset into the parsed text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct LiteralNode {
  Rational value;
};
struct VariableNode {
  std::size_t index;  // 1-based
};
struct PartialNode {
  std::size_t index;  // 1-based
};
struct NegateNode {
  ExprPtr operand;
};
struct BinaryNode {
  char op;  // '+', '-', '*'
  ExprPtr lhs;
  ExprPtr rhs;
};
struct PowerNode {
  ExprPtr base;
  unsigned exponent;
};

struct ExprNode {
  std::variant<LiteralNode, VariableNode, PartialNode, NegateNode, BinaryNode, PowerNode> node;
  std::size_t position = 0;
};

// Parses into a syntax tree; index ranges are checked against l.
ExprPtr parse_expr(std::string_view text, std::size_t l);

DiffOp evaluate_diffop(const ExprNode& expr, std::size_t l);
// Throws ParseError if the tree contains a partial.
Poly evaluate_poly(const ExprNode& expr, std::size_t l);

Poly parse_poly(std::string_view text, std::size_t l);
DiffOp parse_diffop(std::string_view text, std::size_t l);

// "a" or "a/b"; surrounding whitespace and a leading '-' are allowed.
Rational parse_rational(std::string_view text);

struct RenderOptions {
  // Print x, y, z instead of x1, x2, x3 when l <= 3.
  bool aliases = false;
};

std::string render(const Rational& c);
std::string render(const Poly& f, const RenderOptions& options = {});
std::string render(const DiffOp& u, const RenderOptions& options = {});
// A derivation rendered as an operator.
std::string render(const Derivation& d, const RenderOptions& options = {});

}  // namespace logdiff
