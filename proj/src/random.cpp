#include "kolmo/random.hpp"

namespace kolmo {

int RandomSource::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

bool RandomSource::coin(double p) { return std::bernoulli_distribution(p)(engine_); }

Rational RandomSource::small_rational(bool nonzero) {
  for (;;) {
    const int num = uniform_int(-3, 3);
    if (nonzero && num == 0) continue;
    Rational r(num, uniform_int(1, 3));
    r.canonicalize();
    return r;
  }
}

Monomial RandomSource::monomial(std::size_t dim, unsigned degree) {
  Monomial m(dim, 0);
  for (unsigned k = 0; k < degree; ++k) ++m[static_cast<std::size_t>(uniform_int(0, static_cast<int>(dim) - 1))];
  return m;
}

Poly RandomSource::poly(std::size_t dim, unsigned max_degree, std::size_t max_terms, bool nonzero) {
  for (;;) {
    Poly p(dim);
    const int terms = uniform_int(1, static_cast<int>(max_terms));
    for (int t = 0; t < terms; ++t)
      p.add_term(monomial(dim, static_cast<unsigned>(uniform_int(0, static_cast<int>(max_degree)))), small_rational());
    if (!nonzero || !p.is_zero()) return p;
  }
}

Poly RandomSource::homogeneous(std::size_t dim, unsigned degree, std::size_t max_terms, bool nonzero) {
  for (;;) {
    Poly p(dim);
    const int terms = uniform_int(1, static_cast<int>(max_terms));
    for (int t = 0; t < terms; ++t) p.add_term(monomial(dim, degree), small_rational());
    if (!nonzero || !p.is_zero()) return p;
  }
}

PolySquare RandomSource::skew_poly_matrix(std::size_t size, std::size_t dim, unsigned max_degree, bool homog,
                                          bool nonzero) {
  for (;;) {
    PolySquare a(size, std::vector<Poly>(size, Poly(dim)));
    bool any = false;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        Poly p = homog ? homogeneous(dim, max_degree, 3) : poly(dim, max_degree, 3);
        any = any || !p.is_zero();
        a[j][i] = -p;
        a[i][j] = std::move(p);
      }
    }
    if (!nonzero || any) return a;
  }
}

RationalMatrix RandomSource::skew_matrix(std::size_t dim) {
  RationalMatrix upper(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) upper(i, j) = small_rational();
  return skew_from_upper(upper);
}

CubicKolmogorovForm RandomSource::cubic_form(std::size_t dim) {
  RationalVector alpha(dim);
  for (auto& a : alpha) a = small_rational();
  return CubicKolmogorovForm(std::move(alpha), skew_matrix(dim));
}

KolmogorovForm RandomSource::kolmogorov_form(std::size_t dim, unsigned m) {
  const unsigned top = m - 3;
  KolmogorovForm f;
  f.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) f.ftilde.push_back(poly(dim, top, 3));
  f.atilde = skew_poly_matrix(dim, dim, top, false);
  return f;
}

}  // namespace kolmo
