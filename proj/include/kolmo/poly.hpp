#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kolmo/rational.hpp"

namespace kolmo {

// Exponent vector; its length is the ambient dimension.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

// Graded lexicographic order with x1 > x2 > ... ; "greater" sorts leading terms first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Total degree of a polynomial. nullopt is NEG_INF, the degree of zero; std::optional
// already orders it below every natural.
using Degree = std::optional<unsigned>;
inline constexpr Degree kNegInf = std::nullopt;

struct DegreeInfo {
  Degree degree;
  bool homogeneous = true;
};

// Sparse multivariate polynomial over Q in variables x1..x_dim. Variable indices in
// the C++ API are 0-based; the text syntax is 1-based ("x1" is index 0).
// No stored coefficient is ever zero, so the empty term map is the zero polynomial.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  explicit Poly(std::size_t dim = 0) : dim_(dim) {}

  static Poly constant(std::size_t dim, const Rational& c);
  static Poly variable(std::size_t dim, std::size_t index);
  static Poly term(const Monomial& m, const Rational& c);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  // Adds c*m in place, dropping the entry if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Rational& c) { return lhs *= c; }
  friend Poly operator*(const Rational& c, Poly rhs) { return rhs *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  Poly pow(unsigned exponent) const;
  Poly derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;

  Degree degree() const;
  DegreeInfo degree_info() const;

  // Canonical text: graded-lex descending, "p/q" coefficients, reparseable by parse().
  std::string to_string() const;

 private:
  std::size_t dim_;
  Terms terms_;
};

// Parses the polynomial grammar (see README). Throws SyntaxError, IndexOutOfRange,
// ZeroDenominator.
Poly parse(std::string_view text, std::size_t dim);

// q with q*divisor == dividend, or nullopt when divisor does not divide dividend.
// Throws ZeroDivisor, DimMismatch.
std::optional<Poly> divide_exact(const Poly& dividend, const Poly& divisor);

// Free-function spellings of the member operations.
inline Poly differentiate(const Poly& p, std::size_t var) { return p.derivative(var); }
inline Rational evaluate(const Poly& p, std::span<const Rational> point) {
  return p.evaluate(point);
}
inline DegreeInfo degree_info(const Poly& p) { return p.degree_info(); }

// x1^2 + ... + x_dim^2 - r^2.
Poly sphere_polynomial(std::size_t dim, const Rational& radius = 1);

}  // namespace kolmo
