#pragma once

#include <optional>
#include <string>

#include "kolmo/field.hpp"

namespace kolmo {

// Zero set of a nonzero, nonconstant polynomial. Irreducibility is not checked.
class Hypersurface {
 public:
  explicit Hypersurface(Poly defining);
  const Poly& defining() const { return defining_; }
  std::size_t dim() const { return defining_.dim(); }

  friend bool operator==(const Hypersurface&, const Hypersurface&) = default;

 private:
  Poly defining_;
};

// K = k0 + sum k_i x_i^2.
struct StructuredCofactor {
  Rational k0;
  RationalVector k;

  Poly to_poly() const;
  friend bool operator==(const StructuredCofactor&, const StructuredCofactor&) = default;
};

struct Cofactor {
  Poly poly;
  std::optional<StructuredCofactor> structured;
};

// Pattern-matches a constant plus pure squares. Zero gives all-zero k.
std::optional<StructuredCofactor> structured_view(const Poly& k);

// a0 + sum a_i x_i, with an optional slice offset d for {sum a_i x_i = d}.
struct HyperplaneSpec {
  Rational a0;
  RationalVector a;
  std::optional<Rational> offset_d;

  HyperplaneSpec() = default;
  HyperplaneSpec(Rational a0, RationalVector a, std::optional<Rational> offset_d = std::nullopt);

  std::size_t dim() const { return a.size(); }
  Poly linear_polynomial() const;  // a0 + sum a_i x_i
  Poly linear_part() const;        // sum a_i x_i
};

// chi(h) / h when h divides chi(h).
std::optional<Cofactor> cofactor(const PolyVectorField& vf, const Hypersurface& h);

enum class HyperplaneCase { CaseI, CaseII, NotInvariant, InvariantUnstructured };

std::string to_string(HyperplaneCase c);

struct HyperplaneReport {
  HyperplaneCase verdict = HyperplaneCase::NotInvariant;
  // Structural conditions of the hyperplane theorem, evaluated on (alpha, atilde, a).
  bool conditions_hold = false;
  // Predicted (k0, k) when the conditions hold.
  std::optional<StructuredCofactor> predicted;
  // Cofactor from exact division of chi(h) by h on the assembled field.
  std::optional<Cofactor> direct;
  // First violated condition, empty when conditions hold.
  std::string violation;
};

// Throws PreconditionViolated when fewer than two of (a0, a_1, ...) are nonzero and
// InternalError when the structural test and direct division disagree.
HyperplaneReport classify_hyperplane(const CubicKolmogorovForm& form, const HyperplaneSpec& hp);

struct GreatSphereReport {
  Cofactor cofactor;
  Rational weighted_atilde_sum;   // sum_{i,j} a_i atilde_ij
  Rational coefficient_sum;       // K(1, ..., 1)
  Rational coefficient_side;      // (a_1 + ... + a_{n+1}) * K(1, ..., 1)
  Rational k_at_a;                // K(a_1, ..., a_{n+1})

  bool condition_i() const { return weighted_atilde_sum == coefficient_side; }
  bool condition_ii() const { return k_at_a == 0; }
};

// Necessary conditions for an invariant hyperplane through the origin of a homogeneous
// cubic field (alpha = 0). Throws NotHomogeneous, NotInvariant, PreconditionViolated.
GreatSphereReport great_sphere_conditions(const CubicKolmogorovForm& form, const HyperplaneSpec& hp);

struct ConeReport {
  Poly cone;  // (sum a_i x_i)^2 - d^2 sum x_i^2
  std::optional<Poly> cofactor;
  bool invariant() const { return cofactor.has_value(); }
};

// Invariance of the cone over the slice {sum a_i x_i = d} of the unit sphere. Requires a
// homogeneous Kolmogorov field tangent to the sphere; throws NotHomogeneous otherwise and
// PreconditionViolated when hp has no offset_d.
ConeReport cone_invariance(const PolyVectorField& vf, const HyperplaneSpec& hp);

struct SecondSphereReport {
  Poly sphere;  // sum x_i^2 - r^2
  std::optional<Poly> cofactor;
  bool alpha_zero = false;

  bool invariant() const { return cofactor.has_value(); }
};

// Throws BadRadius for r in {0, 1, -1}; InternalError if an invariant sphere shows up with
// alpha != 0 or a nonzero cofactor.
SecondSphereReport second_sphere_check(const CubicKolmogorovForm& form, const Rational& r);

}  // namespace kolmo
