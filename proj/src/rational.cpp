#include "kolmo/rational.hpp"

#include <cctype>

#include "kolmo/errors.hpp"

namespace kolmo {

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw SyntaxError(pos, "digit");
    return std::string(text.substr(start, pos - start));
  };

  skip_ws();
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  skip_ws();
  Integer num(digits());
  Integer den(1);
  skip_ws();
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    skip_ws();
    den = Integer(digits());
    if (den == 0) throw ZeroDenominator("zero denominator in rational literal");
    skip_ws();
  }
  if (pos != text.size()) throw SyntaxError(pos, "end of rational literal");
  Rational r(num, den);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace kolmo
