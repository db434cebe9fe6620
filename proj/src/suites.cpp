#include "kolmo/suites.hpp"

#include <functional>
#include <map>

#include "kolmo/darboux.hpp"
#include "kolmo/errors.hpp"
#include "kolmo/hamiltonian.hpp"
#include "kolmo/random.hpp"

namespace kolmo {

namespace {

using InstanceFn = std::function<std::string(RandomSource&, std::size_t)>;

SuiteReport run_instances(const std::string& name, std::uint64_t seed, std::size_t instances,
                          const InstanceFn& fn) {
  SuiteReport report{name, seed, instances, 0, {}};
  for (std::size_t i = 0; i < instances; ++i) {
    RandomSource rng(seed + i);
    std::string failure;
    try {
      failure = fn(rng, i);
    } catch (const Error& e) {
      failure = std::string("error: ") + e.what();
    }
    if (!failure.empty()) {
      ++report.failures;
      report.notes.push_back("instance " + std::to_string(i) + ": " + failure);
    }
  }
  return report;
}

std::string roundtrip_instance(RandomSource& rng, std::size_t) {
  const auto dim = static_cast<std::size_t>(rng.uniform_int(2, 5));
  const auto m = static_cast<unsigned>(rng.uniform_int(3, 6));
  const KolmogorovForm form = rng.kolmogorov_form(dim, m);
  const PolyVectorField vf = construct_from_form(form);
  const SphereReport rep = is_kolmogorov_on_sphere(vf);
  if (!rep.kolmogorov) return "constructed field is not Kolmogorov";
  if (!rep.sphere_invariant()) return "constructed field does not leave the sphere invariant";
  if (*rep.sphere_cofactor != sphere_cofactor(form)) return "sphere cofactor differs from -2 sum ftilde_i x_i^2";
  if (m == 3) {
    RationalVector alpha;
    RationalMatrix atilde(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      alpha.push_back(form.ftilde[i].constant_term());
      for (std::size_t j = 0; j < dim; ++j) atilde(i, j) = form.atilde[i][j].constant_term();
    }
    const auto recovered = recover_cubic_form(vf);
    if (!recovered || *recovered != CubicKolmogorovForm(alpha, atilde)) return "cubic recovery does not round-trip";
  }
  return "";
}

// Case data for the hyperplane theorem together with the cofactor it predicts.
struct HyperplaneInstance {
  CubicKolmogorovForm form;
  HyperplaneSpec hp;
  StructuredCofactor predicted;
  std::vector<std::size_t> support;
};

HyperplaneInstance hyperplane_instance(RandomSource& rng, bool case_one) {
  const auto dim = static_cast<std::size_t>(rng.uniform_int(2, 5));
  std::vector<std::size_t> support;
  while (support.size() < (case_one ? 1u : 2u)) {
    support.clear();
    for (std::size_t i = 0; i < dim; ++i)
      if (rng.coin()) support.push_back(i);
  }
  std::vector<bool> in_support(dim, false);
  for (std::size_t i : support) in_support[i] = true;

  RationalVector a(dim);
  for (std::size_t i : support) a[i] = rng.nonzero_rational();
  RationalVector alpha(dim);
  for (auto& x : alpha) x = rng.small_rational();
  RationalMatrix atilde = rng.skew_matrix(dim);
  StructuredCofactor predicted{0, RationalVector(dim)};

  if (case_one) {
    for (std::size_t i : support) {
      alpha[i] = 0;
      for (std::size_t j = 0; j < dim; ++j) atilde(i, j) = atilde(j, i) = 0;
    }
    return {CubicKolmogorovForm(alpha, atilde), HyperplaneSpec(rng.nonzero_rational(), a), predicted, support};
  }

  predicted.k0 = rng.small_rational();
  RationalVector shared(dim);
  for (std::size_t j = 0; j < dim; ++j)
    if (!in_support[j]) shared[j] = rng.small_rational();
  for (std::size_t i : support) {
    alpha[i] = predicted.k0;
    for (std::size_t j = 0; j < dim; ++j) {
      atilde(i, j) = shared[j];
      atilde(j, i) = -shared[j];
    }
  }
  for (std::size_t j = 0; j < dim; ++j) predicted.k[j] = shared[j] - predicted.k0;
  return {CubicKolmogorovForm(alpha, atilde), HyperplaneSpec(0, a), predicted, support};
}

std::string thm41_instance(RandomSource& rng, std::size_t index) {
  const bool case_one = index % 2 == 0;
  HyperplaneInstance inst = hyperplane_instance(rng, case_one);
  const Hypersurface h(inst.hp.linear_polynomial());

  auto direct = cofactor(assemble(inst.form), h);
  if (!direct || !direct->structured || *direct->structured != inst.predicted)
    return "case data not invariant with the predicted cofactor";
  const HyperplaneReport rep = classify_hyperplane(inst.form, inst.hp);
  if (rep.verdict != (case_one ? HyperplaneCase::CaseI : HyperplaneCase::CaseII)) return "wrong case reported";

  // Perturb alpha on the support.
  CubicKolmogorovForm bent = inst.form;
  bent.alpha[inst.support.front()] += 1;
  if (cofactor(assemble(bent), h)) return "alpha perturbation kept the hyperplane invariant";
  if (classify_hyperplane(bent, inst.hp).verdict != HyperplaneCase::NotInvariant)
    return "alpha perturbation not reported as not-invariant";

  // Perturb one atilde entry in a support row.
  const std::size_t i1 = inst.support.front();
  const std::size_t j = (i1 + 1) % inst.form.dim;
  bent = inst.form;
  bent.atilde(i1, j) += 1;
  bent.atilde(j, i1) -= 1;
  if (cofactor(assemble(bent), h)) return "atilde perturbation kept the hyperplane invariant";
  return "";
}

std::string thm13_instance(RandomSource& rng, std::size_t index) {
  const std::size_t n = 1 + index % 3;
  CubicKolmogorovForm form = rng.cubic_form(2 * n);
  if (is_zero_vector(form.alpha)) form.alpha[0] = 1;
  if (is_hamiltonian(assemble(form)).is_hamiltonian()) return "random cubic field is Hamiltonian (n=" + std::to_string(n) + ")";
  return "";
}

std::string cor44_instance(RandomSource& rng, std::size_t) {
  // The two-parameter family (a, b) with rank(B) = 2 on S^2.
  const Rational a = rng.nonzero_rational();
  const Rational b = rng.nonzero_rational();
  RationalMatrix upper(3, 3);
  upper(0, 1) = a;
  upper(1, 2) = -a;
  const CubicKolmogorovForm form({b, 0, b}, skew_from_upper(upper));
  const auto cert = complete_integrability_check(form, Hypersurface(sphere_polynomial(3)));
  if (cert.rank_B != 2 || !cert.completely_integrable || cert.integrals.size() != 2)
    return "family not certified completely integrable";
  return "";
}

std::string thm37_instance(RandomSource& rng, std::size_t index) {
  const unsigned m = index % 2 == 0 ? 3 : 4;
  const std::size_t dim = 3;
  PolySquare atilde;
  KolmogorovForm form;
  do {
    form.dim = dim;
    form.ftilde.assign(dim, Poly(dim));
    form.atilde = rng.skew_poly_matrix(dim, dim, m - 3, true, true);
  } while (construct_from_form(form)[dim - 1].is_zero());
  const PolyVectorField vf = construct_from_form(form);
  for (const Rational& d : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
    if (cone_invariance(vf, HyperplaneSpec(0, {0, 0, 1}, d)).invariant())
      return "slice x3 = " + to_string(d) + " is cone-invariant";
  }

  CubicKolmogorovForm cubic = rng.cubic_form(static_cast<std::size_t>(rng.uniform_int(2, 4)));
  if (is_zero_vector(cubic.alpha)) cubic.alpha[0] = rng.nonzero_rational();
  if (second_sphere_check(cubic, 2).invariant()) return "radius-2 sphere invariant with alpha != 0";
  return "";
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"roundtrip", "thm41", "thm13", "cor44", "thm37"};
  return names;
}

std::size_t default_instances(const std::string& name) {
  static const std::map<std::string, std::size_t> counts{
      {"roundtrip", 200}, {"thm41", 200}, {"thm13", 60}, {"cor44", 20}, {"thm37", 100}};
  auto it = counts.find(name);
  return it == counts.end() ? 0 : it->second;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t instances) {
  if (name == "roundtrip") return run_instances(name, seed, instances, roundtrip_instance);
  if (name == "thm41") return run_instances(name, seed, instances, thm41_instance);
  if (name == "thm37") return run_instances(name, seed, instances, thm37_instance);
  if (name == "cor44") {
    SuiteReport rep = run_instances(name, seed, instances, cor44_instance);
    for (std::size_t n = 1; n <= 6; ++n) {
      const std::size_t d = n + 1;
      const RationalMatrix m = hypothesis_matrix(sphere_polynomial(d), d - 1, default_samples(d).back());
      Rational expected = -Rational(static_cast<long>(n) + 3);
      for (std::size_t k = 0; k < n; ++k) expected *= 6;
      const Rational det = determinant(m);
      if (det != expected) {
        ++rep.failures;
        rep.notes.push_back("n=" + std::to_string(n) + ": det(M) = " + to_string(det) + ", expected " +
                            to_string(expected));
      }
    }
    return rep;
  }
  if (name == "thm13") {
    SuiteReport rep = run_instances(name, seed, instances, thm13_instance);
    for (std::size_t n = 1; n <= 3; ++n) {
      const ConstraintSpace space = hamiltonian_constraint_space(n);
      if (space.dimension == 0) continue;
      ++rep.failures;
      std::string note = "n=" + std::to_string(n) + ": constraint space has dimension " +
                         std::to_string(space.dimension) + "; witness field ";
      const PolyVectorField witness = assemble(form_from_parameters(2 * n, space.basis.front()));
      for (const auto& p : witness.components()) note += "[" + p.to_string() + "] ";
      note += is_hamiltonian(witness).is_hamiltonian() ? "is Hamiltonian" : "is NOT Hamiltonian";
      rep.notes.push_back(note);
    }
    return rep;
  }
  throw PreconditionViolated("unknown suite \"" + name + "\"");
}

}  // namespace kolmo
