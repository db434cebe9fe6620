#include "kolmo/field.hpp"

#include <algorithm>

#include "kolmo/errors.hpp"

namespace kolmo {

PolyVectorField::PolyVectorField(std::vector<Poly> components) : components_(std::move(components)) {
  for (const auto& p : components_) {
    if (p.dim() != components_.size()) {
      throw DimMismatch("vector field component has dimension " + std::to_string(p.dim()) +
                        ", expected " + std::to_string(components_.size()));
    }
  }
}

PolyVectorField PolyVectorField::zero(std::size_t dim) {
  return PolyVectorField(std::vector<Poly>(dim, Poly(dim)));
}

Degree PolyVectorField::degree() const {
  Degree d = kNegInf;
  for (const auto& p : components_) d = std::max(d, p.degree());
  return d;
}

bool PolyVectorField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Poly& p) { return p.is_zero(); });
}

void KolmogorovForm::validate() const {
  if (ftilde.size() != dim || atilde.size() != dim)
    throw DimMismatch("canonical form arrays do not match dimension");
  for (std::size_t i = 0; i < dim; ++i) {
    if (atilde[i].size() != dim) throw DimMismatch("atilde is not square");
    if (ftilde[i].dim() != dim) throw DimMismatch("ftilde entry has wrong dimension");
    for (std::size_t j = 0; j < dim; ++j) {
      if (atilde[i][j].dim() != dim) throw DimMismatch("atilde entry has wrong dimension");
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (!atilde[i][i].is_zero())
      throw NotSkew("atilde diagonal entry " + std::to_string(i + 1) + " is nonzero");
    for (std::size_t j = i + 1; j < dim; ++j) {
      if (!(atilde[i][j] + atilde[j][i]).is_zero()) {
        throw NotSkew("atilde(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      ") + atilde(" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                      ") != 0");
      }
    }
  }
}

CubicKolmogorovForm::CubicKolmogorovForm(RationalVector a, RationalMatrix at)
    : dim(a.size()), alpha(std::move(a)), atilde(std::move(at)) {
  validate();
}

CubicKolmogorovForm CubicKolmogorovForm::zero(std::size_t dim) {
  return CubicKolmogorovForm(RationalVector(dim), RationalMatrix(dim, dim));
}

void CubicKolmogorovForm::validate() const {
  if (alpha.size() != dim || atilde.rows() != dim || atilde.cols() != dim)
    throw DimMismatch("cubic form arrays do not match dimension");
  for (std::size_t i = 0; i < dim; ++i) {
    if (atilde(i, i) != 0) throw NotSkew("atilde has a nonzero diagonal entry");
    for (std::size_t j = i + 1; j < dim; ++j)
      if (atilde(i, j) + atilde(j, i) != 0) throw NotSkew("atilde is not skew-symmetric");
  }
}

KolmogorovForm CubicKolmogorovForm::to_form() const {
  KolmogorovForm f;
  f.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    f.ftilde.push_back(Poly::constant(dim, alpha[i]));
    std::vector<Poly> row;
    for (std::size_t j = 0; j < dim; ++j) row.push_back(Poly::constant(dim, atilde(i, j)));
    f.atilde.push_back(std::move(row));
  }
  return f;
}

RationalMatrix skew_from_upper(const RationalMatrix& upper) {
  if (upper.rows() != upper.cols()) throw NotSquare("skew completion needs a square matrix");
  RationalMatrix s(upper.rows(), upper.cols());
  for (std::size_t i = 0; i < upper.rows(); ++i)
    for (std::size_t j = i + 1; j < upper.cols(); ++j) {
      s(i, j) = upper(i, j);
      s(j, i) = -upper(i, j);
    }
  return s;
}

Poly lie_derivative(const PolyVectorField& vf, const Poly& f) {
  if (vf.dim() != f.dim()) throw DimMismatch("field and polynomial dimensions differ");
  Poly out(f.dim());
  for (std::size_t i = 0; i < vf.dim(); ++i) {
    if (vf[i].is_zero()) continue;
    out += vf[i] * f.derivative(i);
  }
  return out;
}

namespace {

Poly square_of(std::size_t dim, std::size_t i) {
  Monomial m(dim, 0);
  m[i] = 2;
  return Poly::term(m, 1);
}

}  // namespace

PolyVectorField construct_from_form(const KolmogorovForm& form) {
  form.validate();
  const std::size_t d = form.dim;
  const Poly one_minus_r2 = -sphere_polynomial(d);
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < d; ++i) {
    Poly q = one_minus_r2 * form.ftilde[i];
    for (std::size_t j = 0; j < d; ++j) {
      if (form.atilde[i][j].is_zero()) continue;
      q += form.atilde[i][j] * square_of(d, j);
    }
    comps.push_back(Poly::variable(d, i) * q);
  }
  return PolyVectorField(std::move(comps));
}

PolyVectorField assemble(const CubicKolmogorovForm& form) { return construct_from_form(form.to_form()); }

Poly sphere_cofactor(const KolmogorovForm& form) {
  Poly k(form.dim);
  for (std::size_t i = 0; i < form.dim; ++i) k += form.ftilde[i] * square_of(form.dim, i);
  return k * Rational(-2);
}

SphereReport is_kolmogorov_on_sphere(const PolyVectorField& vf) {
  SphereReport report;
  const std::size_t d = vf.dim();
  report.kolmogorov = true;
  for (std::size_t i = 0; i < d; ++i) {
    auto q = divide_exact(vf[i], Poly::variable(d, i));
    if (!q) {
      report.kolmogorov = false;
      report.quotients.clear();
      break;
    }
    report.quotients.push_back(std::move(*q));
  }
  if (d > 0) {
    const Poly s = sphere_polynomial(d);
    report.sphere_cofactor = divide_exact(lie_derivative(vf, s), s);
  }
  return report;
}

std::optional<CubicKolmogorovForm> recover_cubic_form(const PolyVectorField& vf) {
  const std::size_t d = vf.dim();
  RationalVector alpha(d);
  RationalMatrix atilde(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    auto q = divide_exact(vf[i], Poly::variable(d, i));
    if (!q) return std::nullopt;
    // Only a constant and pure squares x_j^2 may appear.
    RationalVector square_coeff(d);
    for (const auto& [m, c] : q->terms()) {
      const unsigned deg = total_degree(m);
      if (deg == 0) {
        alpha[i] = c;
      } else if (deg == 2) {
        auto it = std::find(m.begin(), m.end(), 2u);
        if (it == m.end()) return std::nullopt;
        square_coeff[static_cast<std::size_t>(it - m.begin())] = c;
      } else {
        return std::nullopt;
      }
    }
    if (square_coeff[i] != -alpha[i]) return std::nullopt;
    for (std::size_t j = 0; j < d; ++j)
      if (j != i) atilde(i, j) = square_coeff[j] + alpha[i];
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (atilde(i, j) + atilde(j, i) != 0) return std::nullopt;
  return CubicKolmogorovForm(std::move(alpha), std::move(atilde));
}

HomogeneousReport classify_homogeneous(const PolyVectorField& vf) {
  HomogeneousReport report;
  const std::size_t d = vf.dim();
  report.homogeneous = true;
  for (const auto& p : vf.components()) {
    if (p.is_zero()) continue;
    const DegreeInfo info = p.degree_info();
    if (!info.homogeneous || (report.degree && report.degree != info.degree)) {
      report.homogeneous = false;
      break;
    }
    report.degree = info.degree;
  }
  if (!report.homogeneous) report.degree = vf.degree();

  report.kolmogorov = true;
  Poly radial(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Poly xi = Poly::variable(d, i);
    if (!divide_exact(vf[i], xi)) report.kolmogorov = false;
    radial += vf[i] * xi;
  }
  report.tangent = radial.is_zero();
  return report;
}

}  // namespace kolmo
