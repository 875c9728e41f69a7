#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>

#include "a5geom/error.hpp"

namespace a5g {

// Recursive-descent parser for the literal grammar shared by field elements
// and polynomials:  expr := term (('+'|'-') term)*,  term := unary (('*'|'/')
// unary)*,  unary := ('+'|'-') unary | atom ('^' int)?,  atom := integer |
// identifier | '(' expr ')'.  Ops supplies the value semantics.
template <class Ops>
class LiteralParser {
 public:
  using V = typename Ops::value_type;

  LiteralParser(const std::string& s, const Ops& ops) : s_(s), ops_(ops) {}

  V parse() {
    skip();
    if (pos_ >= s_.size()) fail("empty literal");
    V v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::syntax, msg + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  V expr() {
    V v = term();
    for (;;) {
      if (eat('+')) v = ops_.add(v, term());
      else if (eat('-')) v = ops_.sub(v, term());
      else return v;
    }
  }

  V term() {
    V v = unary();
    for (;;) {
      if (eat('*')) v = ops_.mul(v, unary());
      else if (eat('/')) v = ops_.div(v, unary());
      else return v;
    }
  }

  V unary() {
    if (eat('-')) return ops_.neg(unary());
    if (eat('+')) return unary();
    V base = atom();
    if (eat('^')) return ops_.pow(base, exponent());
    return base;
  }

  long exponent() {
    bool paren = eat('(');
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 9) fail("exponent too large");
    long e = std::stol(s_.substr(start, pos_ - start));
    if (paren && !eat(')')) fail("expected ')'");
    return neg ? -e : e;
  }

  V atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ops_.integer(mpz_class(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      V v;
      if (!ops_.symbol(name, v)) fail("unknown symbol '" + name + "'");
      return v;
    }
    fail("unexpected character");
  }

  const std::string& s_;
  const Ops& ops_;
  std::size_t pos_ = 0;
};

}  // namespace a5g
