// Polynomial text grammar (whitespace allowed between tokens):
//
//   expr    = term { ("+" | "-") term } ;
//   term    = unary { "*" unary } ;
//   unary   = "-" unary | "+" unary | power ;
//   power   = atom [ "^" digits ] ;
//   atom    = number | identifier | "(" expr ")" ;
//   number  = digits [ "/" digits ] ;
//   identifier = (letter | "_") { letter | digit | "_" } ;
//
// Juxtaposition ("2x", "x y") is rejected.

#include <cctype>
#include <limits>

#include "logdiv/error.hpp"
#include "logdiv/polynomial.hpp"

namespace logdiv {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial run() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) {
      if (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '(')
        throw ParseError("implicit multiplication is not allowed", pos_);
      throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
    }
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      unsigned long e = 0;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected exponent", pos_);
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
        if (e > std::numeric_limits<std::uint16_t>::max()) throw ParseError("exponent overflow", start);
        ++pos_;
      }
      try {
        return base.pow(static_cast<unsigned>(e));
      } catch (const BudgetExhausted&) {
        throw ParseError("exponent overflow", start);
      }
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Polynomial number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("malformed rational", pos_);
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    Rational v;
    try {
      v = Rational::parse(s_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      throw ParseError("malformed rational", start);
    }
    return Polynomial::constant(ring_, v);
  }

  Polynomial identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string_view name = s_.substr(start, pos_ - start);
    int idx = ring_->index_of(name);
    if (idx < 0) throw ParseError("unknown variable '" + std::string(name) + "'", start);
    return Polynomial::variable(ring_, idx);
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

}  // namespace logdiv
