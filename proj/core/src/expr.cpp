#include "orbitsep/expr.hpp"

#include <cctype>
#include <sstream>

namespace orbitsep {

namespace {

struct Token {
  enum Kind { Int, Ident, Op, End } kind;
  std::string text;
  int col;
};

class Lexer {
 public:
  Lexer(std::string_view s, int line) : s_(s), line_(line) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    int col = static_cast<int>(pos_) + 1;
    if (pos_ >= s_.size()) return {Token::End, "", col};
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return {Token::Int, std::string(s_.substr(start, pos_ - start)), col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_'))
        ++pos_;
      return {Token::Ident, std::string(s_.substr(start, pos_ - start)), col};
    }
    if (std::string("+-*/^()").find(c) != std::string::npos) {
      ++pos_;
      return {Token::Op, std::string(1, c), col};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     col);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
};

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars, Field field,
         int line)
      : lex_(text, line), vars_(vars), field_(field), line_(line) {
    advance();
  }

  RatFunc parse() {
    RatFunc r = expression();
    if (cur_.kind != Token::End)
      throw ParseError("trailing input after expression", line_, cur_.col);
    return r;
  }

 private:
  Lexer lex_;
  Token cur_;
  std::span<const std::string> vars_;
  Field field_;
  int line_;

  void advance() { cur_ = lex_.next(); }

  bool accept_op(const char* op) {
    if (cur_.kind == Token::Op && cur_.text == op) {
      advance();
      return true;
    }
    return false;
  }

  RatFunc expression() {
    RatFunc acc = term();
    for (;;) {
      if (accept_op("+"))
        acc = acc + term();
      else if (accept_op("-"))
        acc = acc - term();
      else
        return acc;
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    for (;;) {
      if (accept_op("*")) {
        acc = acc * unary();
      } else if (accept_op("/")) {
        int col = cur_.col;
        RatFunc d = unary();
        if (d.is_zero())
          throw ParseError("denominator is identically zero", line_, col);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    if (accept_op("-")) return -unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (accept_op("^")) {
      if (cur_.kind != Token::Int)
        throw ParseError("exponent must be a non-negative integer literal",
                         line_, cur_.col);
      unsigned long e = std::stoul(cur_.text);
      advance();
      base = base.pow(static_cast<std::uint32_t>(e));
    }
    return base;
  }

  RatFunc atom() {
    if (cur_.kind == Token::Int) {
      mpz_class v(cur_.text);
      advance();
      FieldElem c = field_.rational()
                        ? FieldElem::rational(mpq_class(v))
                        : FieldElem::rational(mpq_class(v)).to_field(field_);
      return RatFunc::constant(vars_.size(), c);
    }
    if (cur_.kind == Token::Ident) {
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == cur_.text) {
          advance();
          return RatFunc::variable(vars_.size(), i, field_);
        }
      throw ParseError("unknown identifier '" + cur_.text + "'", line_,
                       cur_.col);
    }
    if (accept_op("(")) {
      RatFunc r = expression();
      if (!accept_op(")"))
        throw ParseError("expected ')'", line_, cur_.col);
      return r;
    }
    throw ParseError("expected a number, variable or '('", line_, cur_.col);
  }
};

std::string coeff_str(const FieldElem& c) { return c.str(); }

}  // namespace

RatFunc parse_expression(std::string_view text,
                         std::span<const std::string> vars, Field field,
                         int line_no) {
  return Parser(text, vars, field, line_no).parse();
}

std::string monomial_str(const Monomial& m,
                         std::span<const std::string> vars) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    os << vars[i];
    if (m[i] > 1) os << "^" << m[i];
    first = false;
  }
  return os.str();
}

std::string poly_str(const Poly& p, std::span<const std::string> vars) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // leading term first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    FieldElem shown = c;
    bool negative = false;
    if (c.field().rational() && c.rat() < 0) {
      negative = true;
      shown = -c;
    }
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    std::string ms = monomial_str(m, vars);
    if (ms.empty()) {
      os << coeff_str(shown);
    } else if (shown.is_one()) {
      os << ms;
    } else {
      os << coeff_str(shown) << "*" << ms;
    }
  }
  return os.str();
}

std::string ratfunc_str(const RatFunc& f, std::span<const std::string> vars) {
  if (f.is_polynomial()) return poly_str(f.num(), vars);
  return "(" + poly_str(f.num(), vars) + ")/(" + poly_str(f.den(), vars) + ")";
}

}  // namespace orbitsep
