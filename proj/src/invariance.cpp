#include "kolmo/invariance.hpp"

#include <algorithm>
#include <vector>

#include "kolmo/errors.hpp"

namespace kolmo {

Hypersurface::Hypersurface(Poly defining) : defining_(std::move(defining)) {
  if (defining_.is_constant()) throw PreconditionViolated("hypersurface needs a nonconstant polynomial");
}

Poly StructuredCofactor::to_poly() const {
  const std::size_t d = k.size();
  Poly p = Poly::constant(d, k0);
  for (std::size_t i = 0; i < d; ++i) {
    Monomial m(d, 0);
    m[i] = 2;
    p.add_term(m, k[i]);
  }
  return p;
}

std::optional<StructuredCofactor> structured_view(const Poly& k) {
  StructuredCofactor s{0, RationalVector(k.dim())};
  for (const auto& [m, c] : k.terms()) {
    const unsigned deg = total_degree(m);
    if (deg == 0) {
      s.k0 = c;
      continue;
    }
    auto it = std::find(m.begin(), m.end(), 2u);
    if (deg != 2 || it == m.end()) return std::nullopt;
    s.k[static_cast<std::size_t>(it - m.begin())] = c;
  }
  return s;
}

HyperplaneSpec::HyperplaneSpec(Rational a0_, RationalVector a_, std::optional<Rational> d_)
    : a0(std::move(a0_)), a(std::move(a_)), offset_d(std::move(d_)) {
  if (is_zero_vector(a)) throw AllZeroCoefficients("hyperplane needs some a_i != 0");
}

Poly HyperplaneSpec::linear_part() const {
  Poly p(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) p += a[i] * Poly::variable(a.size(), i);
  }
  return p;
}

Poly HyperplaneSpec::linear_polynomial() const {
  return Poly::constant(a.size(), a0) + linear_part();
}

std::optional<Cofactor> cofactor(const PolyVectorField& vf, const Hypersurface& h) {
  auto k = divide_exact(lie_derivative(vf, h.defining()), h.defining());
  if (!k) return std::nullopt;
  Cofactor c{*k, structured_view(*k)};
  return c;
}

std::string to_string(HyperplaneCase c) {
  switch (c) {
    case HyperplaneCase::CaseI:
      return "case-i";
    case HyperplaneCase::CaseII:
      return "case-ii";
    case HyperplaneCase::NotInvariant:
      return "not-invariant";
    case HyperplaneCase::InvariantUnstructured:
      return "invariant-unstructured";
  }
  return "unknown";
}

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

// Evaluates the structural conditions; returns the violated condition or "".
std::string structural_conditions(const CubicKolmogorovForm& form, const HyperplaneSpec& hp,
                                  StructuredCofactor& predicted) {
  const std::size_t d = form.dim;
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < d; ++i)
    if (hp.a[i] != 0) support.push_back(i);

  predicted = StructuredCofactor{0, RationalVector(d)};
  if (hp.a0 != 0) {
    for (std::size_t i : support) {
      if (form.alpha[i] != 0) return "a_" + idx(i) + " alpha_" + idx(i) + " != 0";
      for (std::size_t j = 0; j < d; ++j)
        if (form.atilde(i, j) != 0) return "a_" + idx(i) + " atilde_" + idx(i) + idx(j) + " != 0";
    }
    return "";
  }

  const std::size_t first = support.front();
  predicted.k0 = form.alpha[first];
  for (std::size_t j = 0; j < d; ++j) predicted.k[j] = form.atilde(first, j) - predicted.k0;
  for (std::size_t p = 0; p < support.size(); ++p) {
    const std::size_t i1 = support[p];
    if (form.alpha[i1] != predicted.k0) return "alpha_" + idx(i1) + " != alpha_" + idx(first);
    for (std::size_t q = p + 1; q < support.size(); ++q) {
      const std::size_t i2 = support[q];
      if (form.atilde(i1, i2) != 0) return "atilde_" + idx(i1) + idx(i2) + " != 0";
      for (std::size_t j = 0; j < d; ++j) {
        if (form.atilde(i1, j) != form.atilde(i2, j))
          return "atilde_" + idx(i1) + idx(j) + " != atilde_" + idx(i2) + idx(j);
      }
    }
  }
  return "";
}

}  // namespace

HyperplaneReport classify_hyperplane(const CubicKolmogorovForm& form, const HyperplaneSpec& hp) {
  if (hp.dim() != form.dim) throw DimMismatch("hyperplane and form dimensions differ");
  const auto nonzero = std::count_if(hp.a.begin(), hp.a.end(), [](const Rational& x) { return x != 0; }) +
                       (hp.a0 != 0 ? 1 : 0);
  if (nonzero < 2) throw PreconditionViolated("need at least two nonzero coefficients among a0, a_i");

  HyperplaneReport report;
  StructuredCofactor predicted;
  report.violation = structural_conditions(form, hp, predicted);
  report.conditions_hold = report.violation.empty();
  if (report.conditions_hold) report.predicted = predicted;

  report.direct = cofactor(assemble(form), Hypersurface(hp.linear_polynomial()));
  const bool direct_structured = report.direct && report.direct->structured;

  if (report.conditions_hold != direct_structured) {
    throw InternalError("hyperplane conditions (" + std::string(report.conditions_hold ? "hold" : "fail") +
                        ") disagree with direct division (" +
                        (direct_structured ? "structured cofactor" : "no structured cofactor") + ")");
  }
  if (report.conditions_hold && *report.direct->structured != predicted)
    throw InternalError("predicted cofactor differs from the one found by division");

  if (report.conditions_hold) {
    report.verdict = hp.a0 != 0 ? HyperplaneCase::CaseI : HyperplaneCase::CaseII;
  } else if (report.direct) {
    report.verdict = HyperplaneCase::InvariantUnstructured;
  } else {
    report.verdict = HyperplaneCase::NotInvariant;
  }
  return report;
}

GreatSphereReport great_sphere_conditions(const CubicKolmogorovForm& form, const HyperplaneSpec& hp) {
  if (hp.dim() != form.dim) throw DimMismatch("hyperplane and form dimensions differ");
  if (!is_zero_vector(form.alpha)) throw NotHomogeneous("great-sphere conditions need alpha = 0");
  if (hp.a0 != 0) throw PreconditionViolated("hyperplane must pass through the origin (a0 = 0)");

  auto k = cofactor(assemble(form), Hypersurface(hp.linear_part()));
  if (!k) throw NotInvariant("hyperplane " + hp.linear_part().to_string() + " = 0 is not invariant");

  GreatSphereReport report{*k, 0, 0, 0, 0};
  Rational a_sum = 0;
  for (std::size_t i = 0; i < form.dim; ++i) {
    a_sum += hp.a[i];
    for (std::size_t j = 0; j < form.dim; ++j) report.weighted_atilde_sum += hp.a[i] * form.atilde(i, j);
  }
  const RationalVector ones(form.dim, Rational(1));
  report.coefficient_sum = k->poly.evaluate(ones);
  report.coefficient_side = a_sum * report.coefficient_sum;
  report.k_at_a = k->poly.evaluate(hp.a);
  return report;
}

ConeReport cone_invariance(const PolyVectorField& vf, const HyperplaneSpec& hp) {
  if (hp.dim() != vf.dim()) throw DimMismatch("hyperplane and field dimensions differ");
  if (!hp.offset_d) throw PreconditionViolated("cone invariance needs the slice offset d");
  if (!classify_homogeneous(vf).passes())
    throw NotHomogeneous("cone test needs a homogeneous Kolmogorov field tangent to the sphere");

  const Rational& d = *hp.offset_d;
  const Poly lin = hp.linear_part();
  ConeReport report{lin * lin - (d * d) * (sphere_polynomial(vf.dim()) + Poly::constant(vf.dim(), 1)),
                    std::nullopt};
  if (report.cone.is_constant()) throw PreconditionViolated("degenerate cone polynomial");
  report.cofactor = divide_exact(lie_derivative(vf, report.cone), report.cone);
  return report;
}

SecondSphereReport second_sphere_check(const CubicKolmogorovForm& form, const Rational& r) {
  if (r == 0 || r == 1 || r == -1) throw BadRadius("radius must not be 0 or +-1");
  SecondSphereReport report{sphere_polynomial(form.dim, r), std::nullopt, is_zero_vector(form.alpha)};
  report.cofactor = divide_exact(lie_derivative(assemble(form), report.sphere), report.sphere);
  if (report.cofactor && (!report.alpha_zero || !report.cofactor->is_zero()))
    throw InternalError("invariant second sphere with alpha != 0 or nonzero cofactor");
  return report;
}

}  // namespace kolmo
