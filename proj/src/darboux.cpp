#include "kolmo/darboux.hpp"

#include <algorithm>

#include "kolmo/errors.hpp"

namespace kolmo {

DarbouxIntegral::DarbouxIntegral(RationalVector exponents, std::vector<Hypersurface> surfaces)
    : exponents_(std::move(exponents)), surfaces_(std::move(surfaces)) {
  if (exponents_.size() != surfaces_.size())
    throw DimMismatch("exponent count does not match surface count");
  if (is_zero_vector(exponents_)) throw PreconditionViolated("Darboux exponents are all zero");
  for (const auto& s : surfaces_)
    if (s.dim() != surfaces_.front().dim()) throw DimMismatch("surfaces live in different dimensions");
}

std::vector<Hypersurface> coordinate_surfaces(std::size_t dim) {
  std::vector<Hypersurface> out;
  for (std::size_t i = 0; i < dim; ++i) out.emplace_back(Poly::variable(dim, i));
  return out;
}

RationalMatrix build_matrix_B(const CubicKolmogorovForm& form, const StructuredCofactor& extra) {
  const std::size_t d = form.dim;
  if (extra.k.size() != d) throw DimMismatch("cofactor dimension does not match form");
  RationalMatrix b(d + 1, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    b(i, 0) = form.alpha[i];
    for (std::size_t j = 0; j < d; ++j) b(i, j + 1) = form.atilde(i, j) - form.alpha[i];
  }
  b(d, 0) = extra.k0;
  for (std::size_t j = 0; j < d; ++j) b(d, j + 1) = extra.k[j];
  return b;
}

RationalMatrix build_matrix_B(const CubicKolmogorovForm& form, const Cofactor& extra) {
  if (!extra.structured)
    throw UnstructuredCofactor("cofactor " + extra.poly.to_string() + " is not k0 + sum k_i x_i^2");
  return build_matrix_B(form, *extra.structured);
}

namespace {

Cofactor require_cofactor(const PolyVectorField& vf, const Hypersurface& g) {
  auto k = cofactor(vf, g);
  if (!k) throw NotInvariant(g.defining().to_string() + " = 0 is not invariant");
  return *k;
}

std::vector<Hypersurface> with_extra(std::size_t dim, const Hypersurface& g) {
  auto s = coordinate_surfaces(dim);
  s.push_back(g);
  return s;
}

}  // namespace

std::vector<DarbouxIntegral> find_darboux(const CubicKolmogorovForm& form, const Hypersurface& g) {
  if (g.dim() != form.dim) throw DimMismatch("surface and form dimensions differ");
  const Cofactor k = require_cofactor(assemble(form), g);
  const RationalMatrix b = build_matrix_B(form, k);
  std::vector<DarbouxIntegral> out;
  for (auto& y : nullspace(b, NullSide::Left)) out.emplace_back(std::move(y), with_extra(form.dim, g));
  return out;
}

bool verify_first_integral(const PolyVectorField& vf, const DarbouxIntegral& integral) {
  Poly total(vf.dim());
  for (std::size_t i = 0; i < integral.surfaces().size(); ++i) {
    const Cofactor k = require_cofactor(vf, integral.surfaces()[i]);
    total += integral.exponents()[i] * k.poly;
  }
  return total.is_zero();
}

std::vector<DarbouxIntegral> syzygy_first_integral(const CubicKolmogorovForm& form) {
  const std::size_t d = form.dim;
  RationalMatrix stack(d + 1, d);
  for (std::size_t j = 0; j < d; ++j) stack(0, j) = form.alpha[j];
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) stack(i + 1, j) = form.atilde(i, j);
  std::vector<DarbouxIntegral> out;
  for (auto& y : nullspace(stack, NullSide::Right)) out.emplace_back(std::move(y), coordinate_surfaces(d));
  return out;
}

std::vector<Poly> reassemble_syzygy(const PolySquare& a, unsigned k) {
  const std::size_t d = a.size();
  std::vector<Poly> q(d, Poly(d));
  for (std::size_t j = 0; j < d; ++j) {
    const Poly xk = Poly::variable(d, j).pow(k);
    for (std::size_t i = 0; i < d; ++i) {
      if (!a[i][j].is_zero()) q[i] += a[i][j] * xk;
    }
  }
  return q;
}

// Peels off the last index: q_last lies in (x_1^k, ..., x_{last-1}^k) because x_1^k, ..., x_d^k
// is a regular sequence, so splitting each of its terms by the first x_j^k that divides it
// leaves no remainder. Those pieces become A_{last,j}; folding -A_{j,last} x_last^k into q_j
// keeps the shorter tuple a syzygy.
PolySquare decompose_syzygy(const std::vector<Poly>& q_in, unsigned k) {
  const std::size_t d = q_in.size();
  if (k == 0) throw PreconditionViolated("syzygy exponent k must be positive");
  for (const auto& p : q_in)
    if (p.dim() != d) throw DimMismatch("syzygy entries must live in dimension " + std::to_string(d));

  Poly check(d);
  for (std::size_t i = 0; i < d; ++i) check += q_in[i] * Poly::variable(d, i).pow(k);
  if (!check.is_zero()) throw NotASyzygy("sum q_i x_i^k = " + check.to_string() + " != 0");

  PolySquare a(d, std::vector<Poly>(d, Poly(d)));
  std::vector<Poly> q = q_in;
  for (std::size_t last = d; last-- > 1;) {
    std::vector<Poly> pieces(last, Poly(d));
    for (const auto& [m, c] : q[last].terms()) {
      std::size_t j = 0;
      while (j < last && m[j] < k) ++j;
      if (j == last) throw InternalError("syzygy reduction left a remainder");
      Monomial reduced = m;
      reduced[j] -= k;
      pieces[j].add_term(reduced, c);
    }
    const Poly x_last_k = Poly::variable(d, last).pow(k);
    for (std::size_t j = 0; j < last; ++j) {
      if (pieces[j].is_zero()) continue;
      a[last][j] = pieces[j];
      a[j][last] = -pieces[j];
      q[j] += pieces[j] * x_last_k;
    }
  }
  if (d > 0 && !q[0].is_zero()) throw InternalError("syzygy reduction did not terminate at zero");
  return a;
}

KolmogorovForm construct_linear_fi_field(const HyperplaneSpec& hp, const PolySquare& seed) {
  const std::size_t d = hp.dim();
  const std::size_t n = d - 1;
  auto pivot_it = std::find_if(hp.a.begin(), hp.a.end(), [](const Rational& x) { return x != 0; });
  if (pivot_it == hp.a.end()) throw AllZeroCoefficients("linear polynomial has no variable part");
  const std::size_t k = static_cast<std::size_t>(pivot_it - hp.a.begin());

  if (seed.size() != n) throw DimMismatch("seed must be " + std::to_string(n) + "x" + std::to_string(n));
  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (seed[i].size() != n) throw DimMismatch("seed is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (seed[i][j].dim() != d) throw DimMismatch("seed entries must live in dimension " + std::to_string(d));
      if (!seed[i][j].is_zero()) all_zero = false;
      if (!(seed[i][j] + seed[j][i]).is_zero()) throw NotSkew("seed is not skew-symmetric");
    }
  }
  if (all_zero) throw ZeroSeed("seed skew matrix is zero");

  const Poly xk = Poly::variable(d, k);
  KolmogorovForm form;
  form.dim = d;
  form.ftilde.assign(d, Poly(d));
  form.atilde.assign(d, std::vector<Poly>(d, Poly(d)));
  // Embed x_k * seed into the rows and columns other than k.
  auto embed = [k](std::size_t i) { return i < k ? i : i + 1; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) form.atilde[embed(i)][embed(j)] = xk * seed[i][j];

  // Row k makes a(x)^T atilde vanish: atilde_kj = -(1/(a_k x_k)) sum_{i != k} a_i x_i atilde_ij.
  const Poly divisor = hp.a[k] * xk;
  for (std::size_t j = 0; j < d; ++j) {
    if (j == k) continue;
    Poly acc(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == k || hp.a[i] == 0) continue;
      acc += hp.a[i] * Poly::variable(d, i) * form.atilde[i][j];
    }
    auto q = divide_exact(acc, divisor);
    if (!q) throw InternalError("row construction is not divisible by a_k x_k");
    form.atilde[k][j] = -*q;
    form.atilde[j][k] = *q;
  }
  form.validate();
  return form;
}

CompletelyIntegrableFamily construct_completely_integrable(std::size_t n, unsigned m, const Poly& atilde) {
  const std::size_t d = n + 1;
  if (n < 1) throw PreconditionViolated("n must be at least 1");
  if (m < 3) throw DegreeMismatch("degree m must be at least 3");
  if (atilde.dim() != d) throw DimMismatch("atilde must live in dimension " + std::to_string(d));
  if (atilde.is_zero()) throw PreconditionViolated("atilde must be nonzero");
  if (atilde.degree() != Degree(m - 3))
    throw DegreeMismatch("atilde has degree " + std::to_string(*atilde.degree()) + ", expected " +
                         std::to_string(m - 3));

  const Poly x1 = Poly::variable(d, 0);
  const Poly x2 = Poly::variable(d, 1);
  std::vector<Poly> comps(d, Poly(d));
  comps[0] = atilde * x1 * x2 * x2;
  comps[1] = -(atilde * x1 * x1 * x2);

  CompletelyIntegrableFamily fam{PolyVectorField(std::move(comps)), {}, RationalVector(d, Rational(1)),
                                 RationalMatrix(n, d), 0};
  std::vector<Poly> defining{sphere_polynomial(d)};
  for (std::size_t j = 2; j < d; ++j) defining.push_back(Poly::variable(d, j));
  for (std::size_t r = 0; r < defining.size(); ++r) {
    fam.integrals.emplace_back(RationalVector{1}, std::vector<Hypersurface>{Hypersurface(defining[r])});
    if (!lie_derivative(fam.field, defining[r]).is_zero())
      throw InternalError("constructed first integral has nonzero Lie derivative");
    for (std::size_t c = 0; c < d; ++c) fam.jacobian(r, c) = defining[r].derivative(c).evaluate(fam.sample_point);
  }
  fam.jacobian_rank = rank(fam.jacobian);
  return fam;
}

SamplePoint::SamplePoint(RationalVector coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_)
    if (c == 0) throw PreconditionViolated("sample points need nonzero coordinates");
}

SampleGrid default_samples(std::size_t dim) {
  std::vector<SamplePoint> points;
  for (std::size_t j = 0; j < dim; ++j) {
    RationalVector z(dim, Rational(1));
    z[j] = 2;
    points.emplace_back(std::move(z));
  }
  return SampleGrid(dim, points);
}

RationalMatrix hypothesis_matrix(const Poly& g, std::size_t omit, const std::vector<SamplePoint>& samples) {
  const std::size_t d = g.dim();
  RationalMatrix m(samples.size(), d);
  for (std::size_t r = 0; r < samples.size(); ++r) {
    const auto& z = samples[r].coords();
    std::size_t c = 0;
    for (std::size_t k = 0; k < d; ++k) {
      if (k == omit) continue;
      m(r, c++) = z[k] * g.derivative(k).evaluate(z);
    }
    m(r, c) = -g.evaluate(z);
  }
  return m;
}

IntegrabilityCertificate complete_integrability_check(const CubicKolmogorovForm& form, const Hypersurface& g,
                                                      const std::optional<SampleGrid>& samples_in) {
  const std::size_t d = form.dim;
  if (d < 2) throw PreconditionViolated("complete integrability needs dimension >= 2");
  if (g.dim() != d) throw DimMismatch("surface and form dimensions differ");
  const SampleGrid samples = samples_in ? *samples_in : default_samples(d);
  if (samples.size() != d) throw DimMismatch("need one sample family per coordinate");

  IntegrabilityCertificate cert;
  const Poly& gp = g.defining();
  for (std::size_t i = 0; i < d; ++i) {
    if (samples[i].size() != d) throw DimMismatch("each sample family needs n+1 points");
    const Poly dg = gp.derivative(i);
    for (const auto& z : samples[i]) {
      if (z.coords().size() != d) throw DimMismatch("sample point has wrong length");
      if (gp.evaluate(z.coords()) == 0 || dg.evaluate(z.coords()) == 0) {
        throw HypothesisFailed(i, 0,
                               "g or dg/dx" + std::to_string(i + 1) + " vanishes at a sample point of family " +
                                   std::to_string(i + 1));
      }
    }
    const RationalMatrix h = hypothesis_matrix(gp, i, samples[i]);
    const std::size_t r = rank(h);
    if (r != d) {
      throw HypothesisFailed(i, r,
                             "sample family " + std::to_string(i + 1) + " spans rank " + std::to_string(r) +
                                 ", need " + std::to_string(d));
    }
    cert.hypothesis_determinants.push_back(determinant(h));
  }

  const PolyVectorField vf = assemble(form);
  const Cofactor k = require_cofactor(vf, g);
  cert.matrix_B = build_matrix_B(form, k);
  cert.rank_B = rank(cert.matrix_B);
  cert.completely_integrable = cert.rank_B <= 2;
  if (!cert.completely_integrable) return cert;

  const std::size_t n = d - 1;
  auto basis = nullspace(cert.matrix_B, NullSide::Left);
  basis.resize(n);
  RationalMatrix y = RationalMatrix::from_rows(basis, d + 1);
  if (rank(y) != n) throw InternalError("emitted exponent vectors are linearly dependent");
  for (auto& v : basis) {
    cert.integrals.emplace_back(std::move(v), with_extra(d, g));
    if (!verify_first_integral(vf, cert.integrals.back()))
      throw InternalError("left-nullspace vector fails sum beta_i K_i = 0");
  }
  return cert;
}

}  // namespace kolmo
