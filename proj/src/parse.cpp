// Recursive-descent parser for polynomial text:
//
//   poly     := ['-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' NAT)?
//   base     := RATIONAL | VAR | '(' poly ')'
//   RATIONAL := INT ('/' POSNAT)?
//   VAR      := 'x' POSNAT
//
// Whitespace is insignificant. Juxtaposition ("2x1") is rejected.

#include <cctype>
#include <climits>

#include "kolmo/errors.hpp"
#include "kolmo/poly.hpp"

namespace kolmo {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

  Poly parse_all() {
    Poly p = parse_poly();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "'+', '-', '*' or end of input");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  // Digits only, no sign, no whitespace inside.
  Integer digits(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(start, what);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Poly parse_poly() {
    Poly acc(dim_);
    bool negate = accept('-');
    Poly t = parse_term();
    acc += negate ? -t : t;
    for (;;) {
      if (accept('+')) {
        acc += parse_term();
      } else if (accept('-')) {
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    while (accept('*')) acc *= parse_factor();
    return acc;
  }

  Poly parse_factor() {
    Poly base = parse_base();
    if (accept('^')) {
      const std::size_t at = pos_;
      Integer e = digits("exponent");
      if (e > UINT_MAX / 2) throw SyntaxError(at, "smaller exponent");
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Poly parse_base() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = parse_poly();
      if (!accept(')')) throw SyntaxError(pos_, "')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      const std::size_t at = pos_;
      if (at >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[at])))
        throw SyntaxError(at, "variable index");
      Integer idx = digits("variable index");
      if (idx == 0) throw SyntaxError(at, "positive variable index");
      if (idx > dim_) {
        throw IndexOutOfRange("variable x" + idx.get_str() + " exceeds dimension " +
                              std::to_string(dim_));
      }
      return Poly::variable(dim_, idx.get_ui() - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits("integer");
      Integer den = 1;
      if (accept('/')) {
        den = digits("denominator");
        if (den == 0) throw ZeroDenominator("zero denominator at position " + std::to_string(pos_));
      }
      Rational r(num, den);
      r.canonicalize();
      return Poly::constant(dim_, r);
    }
    throw SyntaxError(pos_, "number, variable or '('");
  }

  std::string_view text_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse(std::string_view text, std::size_t dim) { return Parser(text, dim).parse_all(); }

}  // namespace kolmo
