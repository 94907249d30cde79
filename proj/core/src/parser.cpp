#include "pwb/parser.hpp"

#include <cctype>
#include <climits>
#include <string>

#include "pwb/errors.hpp"

namespace pwb {
namespace {

class Parser {
 public:
  Parser(const PolyRing& ring, std::string_view text) : ring_(ring), s_(text) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
  }
  bool at_end() {
    skip();
    return pos_ == s_.size();
  }

  Poly expr() {
    Poly acc(ring_);
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Poly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Poly d = factor();
        if (!d.is_constant()) throw SyntaxError("division by a non-scalar", at);
        if (d.is_zero()) throw ZeroElement("division by zero at offset " + std::to_string(at));
        acc = acc.scaled(d.constant_term().inverse());
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    if (accept('-')) return -factor();
    Poly b = base();
    if (accept('^')) {
      std::size_t at = pos_;
      unsigned long e = uint_literal();
      if (e > static_cast<unsigned long>(INT_MAX)) throw ExponentOverflow("exponent too large at offset " + std::to_string(at));
      b = b.pow(static_cast<int>(e));
    }
    return b;
  }

  unsigned long uint_literal() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected an unsigned integer", start);
    std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 18) throw ExponentOverflow("integer literal too large at offset " + std::to_string(start));
    return std::stoul(digits);
  }

  Poly base() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Rational r(std::string(s_.substr(start, pos_ - start)));
      return Poly::constant(ring_, Cyclo(r));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == "zeta") {
        expect('(');
        std::size_t at = pos_;
        unsigned long n = uint_literal();
        if (n == 0 || n > 100000) throw SyntaxError("zeta conductor out of range", at);
        expect(')');
        return Poly::constant(ring_, Cyclo::zeta(static_cast<long>(n)));
      }
      auto idx = ring_.index_of(name);
      if (!idx) throw UnknownVariable("unknown variable '" + name + "' at offset " + std::to_string(start));
      return Poly::variable(ring_, *idx);
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  const PolyRing& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const PolyRing& ring, std::string_view text) { return Parser(ring, text).parse(); }

Cyclo parse_scalar(std::string_view text) {
  PolyRing none;
  Poly p = Parser(none, text).parse();
  return p.constant_term();
}

}  // namespace pwb
