#include "stringy/poly_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "stringy/errors.hpp"

namespace stringy {

namespace {

std::string exponent_str(const Rat& e) {
  if (e == 1) return "";
  return "^" + to_string(e);
}

std::string term_str(const Exponents& e, const Int& coeff) {
  Int abs_c = abs(coeff);
  std::string mono;
  if (e.p == 0 && e.q == 0) {
    mono.clear();
  } else if (e.p == e.q) {
    mono = (e.p == 1) ? "uv" : "(uv)" + exponent_str(e.p);
  } else {
    std::string parts;
    if (e.p != 0) parts += "u" + exponent_str(e.p);
    if (e.q != 0) {
      if (!parts.empty()) parts += "*";
      parts += "v" + exponent_str(e.q);
    }
    mono = parts;
  }
  if (mono.empty()) return abs_c.get_str();
  if (abs_c == 1) return mono;
  return abs_c.get_str() + "*" + mono;
}

}  // namespace

std::string to_string(const FracPoly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : poly.terms()) {
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    out += term_str(e, c);
  }
  return out;
}

std::string to_string(const RationalExpr& expr) {
  if (expr.is_polynomial()) return to_string(expr.numerator());
  std::string den;
  long total = 0;
  for (const auto& [a, mult] : expr.denominator_factors()) {
    for (long i = 0; i < mult; ++i) {
      if (!den.empty()) den += "*";
      den += "((uv)^" + to_string(a) + " - 1)";
      ++total;
    }
  }
  if (total > 1) den = "(" + den + ")";
  return "(" + to_string(expr.numerator()) + ") / " + den;
}

// ---------------------------------------------------------------------------
// Parsing.

namespace {

enum class Tok { Number, U, V, UV, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  Int value;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  [[noreturn]] void fail_here(const std::string& msg) const { fail(msg, tok_.pos); }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    tok_.pos = i_;
    if (i_ >= s_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      tok_.kind = Tok::Number;
      tok_.value = Int(s_.substr(i_, j - i_));
      i_ = j;
      return;
    }
    if (c == 'u') {
      if (i_ + 1 < s_.size() && s_[i_ + 1] == 'v') {
        tok_.kind = Tok::UV;
        i_ += 2;
      } else {
        tok_.kind = Tok::U;
        ++i_;
      }
      return;
    }
    if (c == 'v') {
      tok_.kind = Tok::V;
      ++i_;
      return;
    }
    if (c == '(') {
      if (i_ + 3 < s_.size() && s_[i_ + 1] == 'u' && s_[i_ + 2] == 'v' &&
          s_[i_ + 3] == ')') {
        tok_.kind = Tok::UV;
        i_ += 4;
        return;
      }
      tok_.kind = Tok::LParen;
      ++i_;
      return;
    }
    switch (c) {
      case ')': tok_.kind = Tok::RParen; break;
      case '+': tok_.kind = Tok::Plus; break;
      case '-': tok_.kind = Tok::Minus; break;
      case '*': tok_.kind = Tok::Star; break;
      case '^': tok_.kind = Tok::Caret; break;
      case '/': tok_.kind = Tok::Slash; break;
      default:
        fail("unexpected character '" + std::string(1, c) + "'", i_);
    }
    ++i_;
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  FracPoly parse_poly_all() {
    FracPoly p = parse_poly();
    if (lex_.peek().kind != Tok::End) lex_.fail_here("trailing input after polynomial");
    return p;
  }

  RationalExpr parse_expr_all() {
    RationalExpr e = parse_expr();
    if (lex_.peek().kind != Tok::End) lex_.fail_here("trailing input after expression");
    return e;
  }

 private:
  Rat parse_rational() {
    bool neg = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      neg = true;
    }
    if (lex_.peek().kind == Tok::LParen) {
      lex_.take();
      Rat inner = parse_rational();
      expect(Tok::RParen, "')' after exponent");
      return neg ? Rat(-inner) : inner;
    }
    if (lex_.peek().kind != Tok::Number) lex_.fail_here("expected a number");
    Int num = lex_.take().value;
    Int den(1);
    if (lex_.peek().kind == Tok::Slash) {
      lex_.take();
      if (lex_.peek().kind != Tok::Number) lex_.fail_here("expected a denominator");
      den = lex_.take().value;
      if (den == 0) lex_.fail_here("zero denominator");
    }
    Rat r = make_rat(num, den);
    return neg ? Rat(-r) : r;
  }

  bool at_monomial() const {
    Tok k = lex_.peek().kind;
    return k == Tok::U || k == Tok::V || k == Tok::UV;
  }

  // One term: optional integer coefficient followed by monomials joined
  // with optional '*'.
  void parse_term(FracPoly& acc, bool negative) {
    Int coeff(1);
    bool saw_any = false;
    if (lex_.peek().kind == Tok::Number) {
      coeff = lex_.take().value;
      saw_any = true;
      if (lex_.peek().kind == Tok::Star) lex_.take();
    }
    Rat p(0), q(0);
    while (at_monomial()) {
      saw_any = true;
      Token m = lex_.take();
      Rat e(1);
      if (lex_.peek().kind == Tok::Caret) {
        lex_.take();
        e = parse_rational();
      }
      switch (m.kind) {
        case Tok::U: p += e; break;
        case Tok::V: q += e; break;
        default: p += e; q += e; break;
      }
      if (lex_.peek().kind == Tok::Star) {
        lex_.take();
        if (!at_monomial()) lex_.fail_here("expected a monomial after '*'");
      }
    }
    if (!saw_any) lex_.fail_here("expected a term");
    if (negative) coeff = -coeff;
    acc.add_term(p, q, coeff);
  }

  FracPoly parse_poly() {
    FracPoly acc;
    bool negative = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      negative = true;
    } else if (lex_.peek().kind == Tok::Plus) {
      lex_.take();
    }
    // special case: a single "0"
    if (lex_.peek().kind == Tok::Number && lex_.peek().value == 0) {
      Token zero = lex_.take();
      (void)zero;
      Tok k = lex_.peek().kind;
      if (k != Tok::Plus && k != Tok::Minus && !at_monomial() && k != Tok::Star)
        return acc;
      lex_.fail_here("unexpected input after 0");
    }
    parse_term(acc, negative);
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      bool neg = lex_.take().kind == Tok::Minus;
      parse_term(acc, neg);
    }
    return acc;
  }

  // ((uv)^a - 1), with the leading '(' already consumed.
  Rat parse_factor_body() {
    expect(Tok::UV, "'(uv)' in denominator factor");
    expect(Tok::Caret, "'^' in denominator factor");
    Rat a = parse_rational();
    expect(Tok::Minus, "'- 1' in denominator factor");
    if (lex_.peek().kind != Tok::Number || lex_.peek().value != 1)
      lex_.fail_here("denominator factor must end in '- 1'");
    lex_.take();
    expect(Tok::RParen, "')' closing denominator factor");
    return a;
  }

  RationalExpr::DenMap parse_denominator() {
    RationalExpr::DenMap den;
    expect(Tok::LParen, "'(' starting denominator");
    if (lex_.peek().kind == Tok::UV) {
      den[parse_factor_body()] += 1;
      return den;
    }
    // Parenthesized product of factors.
    while (true) {
      expect(Tok::LParen, "'(' starting denominator factor");
      den[parse_factor_body()] += 1;
      if (lex_.peek().kind == Tok::Star) {
        lex_.take();
        continue;
      }
      break;
    }
    expect(Tok::RParen, "')' closing denominator");
    return den;
  }

  RationalExpr parse_expr() {
    FracPoly num;
    if (lex_.peek().kind == Tok::LParen) {
      lex_.take();
      num = parse_poly();
      expect(Tok::RParen, "')' closing numerator");
    } else {
      num = parse_poly();
    }
    if (lex_.peek().kind != Tok::Slash) return RationalExpr(std::move(num));
    lex_.take();
    return RationalExpr(std::move(num), parse_denominator());
  }

  void expect(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind) lex_.fail_here("expected " + what);
    lex_.take();
  }

  Lexer lex_;
};

}  // namespace

FracPoly parse_fracpoly(const std::string& text) {
  return Parser(text).parse_poly_all();
}

RationalExpr parse_rational_expr(const std::string& text) {
  return Parser(text).parse_expr_all();
}

}  // namespace stringy
