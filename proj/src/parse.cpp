// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#include "kronecker/parse.hpp"

#include <cctype>
#include <sstream>

namespace kronecker {

ParseError::ParseError(ParseDiagnostic d)
    : Error("parse error at offset " + std::to_string(d.offset) + ": " + d.message +
            (d.expected.empty() ? std::string() : " (expected " + d.expected + ")")),
      diag_(std::move(d)) {}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

constexpr int kMaxDepth = 200;
constexpr long kMaxDegree = 100000;

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (true) {
      while (i < s_.size() && std::isspace(static_cast<unsigned char>(s_[i]))) ++i;
      if (i >= s_.size()) {
        out.push_back({Tok::End, s_.size(), ""});
        return out;
      }
      const char c = s_[i];
      const std::size_t start = i;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i]))) ++i;
        out.push_back({Tok::Number, start, std::string(s_.substr(start, i - start))});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        ++i;
        if (c != 'X' && c != 'x') {
          while (i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i]))) ++i;
        }
        out.push_back({Tok::Ident, start, std::string(s_.substr(start, i - start))});
        continue;
      }
      Tok k;
      switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default: {
          std::string shown = std::isprint(static_cast<unsigned char>(c))
                                  ? std::string(1, c)
                                  : "byte " + std::to_string(static_cast<unsigned char>(c));
          throw ParseError({start, "unexpected character '" + shown + "'",
                            "number, variable, operator or parenthesis"});
        }
      }
      ++i;
      out.push_back({k, start, std::string(1, c)});
    }
  }

 private:
  std::string_view s_;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, const std::function<bool(std::string_view)>& known)
      : t_(std::move(toks)), known_(known) {}

  Expr parse() {
    Expr e = poly(0);
    if (peek().kind != Tok::End) {
      if (peek().kind == Tok::RParen) fail("unbalanced ')'", "end of input or operator");
      fail("unexpected token '" + peek().text + "'", "'+', '-', '*' or end of input");
    }
    return e;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  const Token& take() { return t_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, const std::string& expected) const {
    throw ParseError({peek().offset, msg, expected});
  }

  static Expr binary(Expr::Kind k, Expr a, Expr b, std::size_t off) {
    Expr e;
    e.kind = k;
    e.offset = off;
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }

  Expr poly(int depth) {
    if (depth > kMaxDepth) fail("expression nested too deeply", "");
    Expr lhs = term(depth);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token op = take();
      Expr rhs = term(depth);
      lhs = binary(op.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub, std::move(lhs),
                   std::move(rhs), op.offset);
    }
    return lhs;
  }

  static bool starts_primary(Tok k) {
    return k == Tok::Number || k == Tok::Ident || k == Tok::LParen;
  }

  Expr term(int depth) {
    Expr lhs = factor(depth);
    while (true) {
      if (peek().kind == Tok::Star) {
        const Token op = take();
        Expr rhs = factor(depth);
        lhs = binary(Expr::Kind::Mul, std::move(lhs), std::move(rhs), op.offset);
      } else if (starts_primary(peek().kind)) {
        const std::size_t off = peek().offset;
        Expr rhs = factor(depth);
        lhs = binary(Expr::Kind::Mul, std::move(lhs), std::move(rhs), off);
      } else {
        return lhs;
      }
    }
  }

  Expr factor(int depth) {
    if (depth > kMaxDepth) fail("expression nested too deeply", "");
    if (peek().kind == Tok::Minus) {
      const Token op = take();
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.offset = op.offset;
      e.args.push_back(factor(depth + 1));
      return e;
    }
    Expr base = primary(depth);
    if (peek().kind == Tok::Caret) {
      const Token op = take();
      if (peek().kind == Tok::Minus) fail("negative exponent", "nonnegative integer exponent");
      if (peek().kind != Tok::Number) fail("exponent must be a nonnegative integer", "nonnegative integer exponent");
      const Token n = take();
      if (n.text.size() > 6 || std::stoul(n.text) > kMaxExponent) {
        throw ParseError({n.offset, "exponent too large", "exponent <= " + std::to_string(kMaxExponent)});
      }
      if (peek().kind == Tok::Slash) fail("exponent must be a nonnegative integer", "nonnegative integer exponent");
      Expr e;
      e.kind = Expr::Kind::Pow;
      e.offset = op.offset;
      e.exponent = static_cast<unsigned>(std::stoul(n.text));
      e.args.push_back(std::move(base));
      if (peek().kind == Tok::Caret) fail("chained '^' is ambiguous", "parentheses");
      return e;
    }
    return base;
  }

  Expr primary(int depth) {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        const Token num = take();
        Integer n(num.text, 10);
        Integer d(1);
        if (peek().kind == Tok::Slash) {
          take();
          if (peek().kind != Tok::Number) fail("expected denominator after '/'", "positive integer");
          const Token den = take();
          d = Integer(den.text, 10);
          if (d == 0) throw ParseError({den.offset, "denominator must be positive", "positive integer"});
        }
        Expr e;
        e.kind = Expr::Kind::Number;
        e.offset = num.offset;
        e.value = Rational(n, d);
        e.value.canonicalize();
        return e;
      }
      case Tok::Ident: {
        const Token id = take();
        if (id.text != "X" && id.text != "x" && !(known_ && known_(id.text))) {
          throw ParseError({id.offset, "unknown variable '" + id.text + "'", "X"});
        }
        Expr e;
        e.kind = Expr::Kind::Variable;
        e.offset = id.offset;
        e.name = (id.text == "x") ? "X" : id.text;
        return e;
      }
      case Tok::LParen: {
        take();
        Expr inner = poly(depth + 1);
        if (peek().kind != Tok::RParen) fail("missing ')'", "')'");
        take();
        return inner;
      }
      case Tok::End:
        fail("unexpected end of input", "number, variable or '('");
      default:
        fail("unexpected token '" + t.text + "'", "number, variable or '('");
    }
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
  const std::function<bool(std::string_view)>& known_;
};

// Upper bound on the X-degree of an expression, saturating.
long degree_bound(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return 0;
    case Expr::Kind::Variable: return 1;
    case Expr::Kind::Neg: return degree_bound(e.args[0]);
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return std::max(degree_bound(e.args[0]), degree_bound(e.args[1]));
    case Expr::Kind::Mul: return std::min(kMaxDegree + 1, degree_bound(e.args[0]) + degree_bound(e.args[1]));
    case Expr::Kind::Pow: {
      long b = degree_bound(e.args[0]);
      if (b == 0 || e.exponent == 0) return 0;
      return b > (kMaxDegree + 1) / static_cast<long>(e.exponent) ? kMaxDegree + 1
                                                                    : b * static_cast<long>(e.exponent);
    }
  }
  return 0;
}

const Expr* first_over(const Expr& e) {
  for (const auto& a : e.args) {
    if (const Expr* x = first_over(a)) return x;
  }
  return degree_bound(e) > kMaxDegree ? &e : nullptr;
}

}  // namespace

Expr parse_expression(std::string_view text, const std::function<bool(std::string_view)>& known) {
  Parser p(Lexer(text).run(), known);
  return p.parse();
}

Polynomial parse_polynomial(std::string_view text) {
  const std::function<bool(std::string_view)> none;
  Expr e = parse_expression(text, none);
  if (const Expr* big = first_over(e)) {
    throw ParseError({big->offset, "polynomial degree exceeds " + std::to_string(kMaxDegree), ""});
  }
  return evaluate_expression<Polynomial>(
      e, [](const Rational& c) { return Polynomial::constant(c); },
      [](const std::string&, std::size_t) { return Polynomial::x(); });
}

std::string format_polynomial(const Polynomial& f, std::string_view var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = f.degree(); k >= 0; --k) {
    const Rational& c = f.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational a = abs(c);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace kronecker
