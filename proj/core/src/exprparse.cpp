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

#include "logdiff/exprparse.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace logdiff {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

enum class Tok { kNumber, kVariable, kPartial, kPlus, kMinus, kStar, kCaret, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::size_t pos;
  Rational number;
  std::size_t index = 0;
  bool is_integer = false;
};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  Lexer(std::string_view text, std::size_t l) : text_(text), l_(l) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::kEnd, pos_, 0});
        return out;
      }
      const char c = text_[pos_];
      const std::size_t start = pos_;
      switch (c) {
        case '+': out.push_back({Tok::kPlus, start, 0}); ++pos_; continue;
        case '-': out.push_back({Tok::kMinus, start, 0}); ++pos_; continue;
        case '*': out.push_back({Tok::kStar, start, 0}); ++pos_; continue;
        case '^': out.push_back({Tok::kCaret, start, 0}); ++pos_; continue;
        case '(': out.push_back({Tok::kLParen, start, 0}); ++pos_; continue;
        case ')': out.push_back({Tok::kRParen, start, 0}); ++pos_; continue;
        default: break;
      }
      if (is_digit(c)) {
        out.push_back(number());
      } else if (is_alpha(c)) {
        out.push_back(identifier());
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Token number() {
    const std::size_t start = pos_;
    std::string num(digits());
    bool integer = true;
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' && is_digit(text_[pos_ + 1])) {
      ++pos_;
      num += '/';
      num += digits();
      integer = false;
    }
    Rational value;
    if (value.set_str(num, 10) != 0) throw ParseError("malformed number", start);
    if (!integer && sgn(value.get_den()) == 0) throw ParseError("zero denominator", start);
    value.canonicalize();
    Token t{Tok::kNumber, start, value};
    t.is_integer = integer;
    return t;
  }

  Token identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (is_alpha(text_[pos_]) || is_digit(text_[pos_]))) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);

    if (word.size() == 1 && l_ <= 3) {
      const std::size_t alias = word == "x" ? 1 : word == "y" ? 2 : word == "z" ? 3 : 0;
      if (alias != 0) return indexed(Tok::kVariable, alias, start);
    }
    if ((word[0] == 'x' || word[0] == 'd') && word.size() > 1) {
      const std::string_view rest = word.substr(1);
      std::size_t index = 0;
      auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), index);
      if (ec == std::errc() && end == rest.data() + rest.size()) {
        return indexed(word[0] == 'x' ? Tok::kVariable : Tok::kPartial, index, start);
      }
    }
    throw ParseError("unknown identifier '" + std::string(word) + "'", start);
  }

  Token indexed(Tok kind, std::size_t index, std::size_t start) const {
    if (index == 0 || index > l_) {
      throw ParseError("index " + std::to_string(index) + " out of range 1.." +
                           std::to_string(l_),
                       start);
    }
    Token t{kind, start, 0};
    t.index = index;
    return t;
  }

  std::string_view text_;
  std::size_t l_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (peek().kind != Tok::kEnd) throw ParseError("unexpected trailing input", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& next() { return tokens_[at_++]; }

  static ExprPtr make(std::size_t pos, auto node) {
    auto e = std::make_unique<ExprNode>();
    e->node = std::move(node);
    e->position = pos;
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const Token& op = next();
      ExprPtr rhs = term();
      lhs = make(op.pos, BinaryNode{op.kind == Tok::kPlus ? '+' : '-', std::move(lhs),
                                    std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (peek().kind == Tok::kStar) {
      const Token& op = next();
      ExprPtr rhs = unary();
      lhs = make(op.pos, BinaryNode{'*', std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (peek().kind == Tok::kMinus) {
      const Token& op = next();
      return make(op.pos, NegateNode{unary()});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (peek().kind != Tok::kCaret) return base;
    const Token& caret = next();
    if (peek().kind == Tok::kMinus) throw ParseError("negative exponent", peek().pos);
    const Token& exp = next();
    if (exp.kind != Tok::kNumber || !exp.is_integer) {
      throw ParseError("exponent must be a non-negative integer", exp.pos);
    }
    if (!exp.number.get_num().fits_uint_p()) throw ParseError("exponent too large", exp.pos);
    if (peek().kind == Tok::kCaret) {
      throw ParseError("chained exponents need parentheses", peek().pos);
    }
    return make(caret.pos,
                PowerNode{std::move(base), static_cast<unsigned>(exp.number.get_num().get_ui())});
  }

  ExprPtr atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::kNumber: return make(t.pos, LiteralNode{t.number});
      case Tok::kVariable: return make(t.pos, VariableNode{t.index});
      case Tok::kPartial: return make(t.pos, PartialNode{t.index});
      case Tok::kLParen: {
        ExprPtr inner = expr();
        if (peek().kind != Tok::kRParen) throw ParseError("expected ')'", peek().pos);
        next();
        return inner;
      }
      case Tok::kEnd: throw ParseError("unexpected end of input", t.pos);
      default: throw ParseError("expected a number, variable, partial or '('", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

template <class Value, class Leaf>
Value fold(const ExprNode& e, std::size_t l, Leaf&& leaf) {
  return std::visit(
      [&](const auto& n) -> Value {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, NegateNode>) {
          return -fold<Value>(*n.operand, l, leaf);
        } else if constexpr (std::is_same_v<N, BinaryNode>) {
          Value a = fold<Value>(*n.lhs, l, leaf);
          Value b = fold<Value>(*n.rhs, l, leaf);
          if (n.op == '+') return a + b;
          if (n.op == '-') return a - b;
          return a * b;
        } else if constexpr (std::is_same_v<N, PowerNode>) {
          Value base = fold<Value>(*n.base, l, leaf);
          Value out = Value(Poly::constant(l, 1));
          for (unsigned k = 0; k < n.exponent; ++k) out = out * base;
          return out;
        } else {
          return leaf(n, e.position);
        }
      },
      e.node);
}

}  // namespace

ExprPtr parse_expr(std::string_view text, std::size_t l) {
  if (l == 0) throw std::invalid_argument("parse: dimension must be positive");
  return Parser(Lexer(text, l).run()).run();
}

DiffOp evaluate_diffop(const ExprNode& expr, std::size_t l) {
  return fold<DiffOp>(expr, l, [l](const auto& n, std::size_t) -> DiffOp {
    using N = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<N, LiteralNode>) {
      return Poly::constant(l, n.value);
    } else if constexpr (std::is_same_v<N, VariableNode>) {
      return Poly::variable(l, n.index - 1);
    } else {
      return DiffOp::partial(l, n.index - 1);
    }
  });
}

Poly evaluate_poly(const ExprNode& expr, std::size_t l) {
  return fold<Poly>(expr, l, [l](const auto& n, std::size_t pos) -> Poly {
    using N = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<N, LiteralNode>) {
      return Poly::constant(l, n.value);
    } else if constexpr (std::is_same_v<N, VariableNode>) {
      return Poly::variable(l, n.index - 1);
    } else {
      throw ParseError("partial derivative not allowed in a polynomial", pos);
    }
  });
}

Poly parse_poly(std::string_view text, std::size_t l) {
  return evaluate_poly(*parse_expr(text, l), l);
}

DiffOp parse_diffop(std::string_view text, std::size_t l) {
  return evaluate_diffop(*parse_expr(text, l), l);
}

Rational parse_rational(std::string_view text) {
  ExprPtr e = Parser(Lexer(text, 1).run()).run();
  if (auto* lit = std::get_if<LiteralNode>(&e->node)) return lit->value;
  if (auto* neg = std::get_if<NegateNode>(&e->node)) {
    if (auto* inner = std::get_if<LiteralNode>(&neg->operand->node)) return -inner->value;
  }
  throw ParseError("expected a rational number", 0);
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string variable_name(std::size_t i, std::size_t l, const RenderOptions& opt) {
  if (opt.aliases && l <= 3) return std::string(1, "xyz"[i]);
  return "x" + std::to_string(i + 1);
}

void append_factors(std::vector<std::string>& parts, const Monomial& m, char prefix,
                    std::size_t l, const RenderOptions& opt) {
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    std::string f = prefix == 'x' ? variable_name(i, l, opt) : "d" + std::to_string(i + 1);
    if (m[i] > 1) f += "^" + std::to_string(m[i]);
    parts.push_back(std::move(f));
  }
}

// Appends one signed term; factors empty means a bare constant.
void append_term(std::string& out, const Rational& c, const std::vector<std::string>& factors) {
  const bool negative = sgn(c) < 0;
  const Rational mag = abs(c);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  std::string body;
  if (factors.empty() || mag != 1) body = render(mag);
  for (const std::string& f : factors) {
    if (!body.empty()) body += "*";
    body += f;
  }
  out += body;
}

}  // namespace

std::string render(const Rational& c) { return c.get_str(10); }

std::string render(const Poly& f, const RenderOptions& options) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::string> factors;
    append_factors(factors, m, 'x', f.nvars(), options);
    append_term(out, c, factors);
  }
  return out;
}

std::string render(const DiffOp& u, const RenderOptions& options) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [beta, coeff] : u.terms()) {
    for (const auto& [m, c] : coeff.terms()) {
      std::vector<std::string> factors;
      append_factors(factors, m, 'x', u.nvars(), options);
      append_factors(factors, beta, 'd', u.nvars(), options);
      append_term(out, c, factors);
    }
  }
  return out;
}

std::string render(const Derivation& d, const RenderOptions& options) {
  return render(d.to_diffop(), options);
}

}  // namespace logdiff
