#pragma once

#include <cstdint>
#include <random>

#include "kolmo/field.hpp"

namespace kolmo {

// Seeded generator of small exact instances for the randomized suites. Coefficients are
// rationals with |numerator| <= 3 and denominator <= 3 so products stay readable.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  int uniform_int(int lo, int hi);
  bool coin(double p = 0.5);
  Rational small_rational(bool nonzero = false);
  Rational nonzero_rational() { return small_rational(true); }

  // Up to max_terms random monomials of total degree <= max_degree (exactly `degree` when
  // homogeneous). May return zero unless nonzero is set.
  Poly poly(std::size_t dim, unsigned max_degree, std::size_t max_terms, bool nonzero = false);
  Poly homogeneous(std::size_t dim, unsigned degree, std::size_t max_terms, bool nonzero = false);

  // Skew matrix of polynomials of degree <= max_degree (homogeneous of that degree if asked).
  PolySquare skew_poly_matrix(std::size_t size, std::size_t dim, unsigned max_degree, bool homogeneous,
                              bool nonzero = false);
  RationalMatrix skew_matrix(std::size_t dim);
  CubicKolmogorovForm cubic_form(std::size_t dim);
  // deg ftilde_i, deg atilde_ij <= m - 3.
  KolmogorovForm kolmogorov_form(std::size_t dim, unsigned m);

  std::mt19937_64& engine() { return engine_; }

 private:
  Monomial monomial(std::size_t dim, unsigned degree);
  std::mt19937_64 engine_;
};

}  // namespace kolmo
