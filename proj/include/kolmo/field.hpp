#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kolmo/matrix.hpp"
#include "kolmo/poly.hpp"

namespace kolmo {

using PolySquare = std::vector<std::vector<Poly>>;

// Polynomial vector field (P_1, ..., P_d) on R^d.
class PolyVectorField {
 public:
  PolyVectorField() = default;
  explicit PolyVectorField(std::vector<Poly> components);
  static PolyVectorField zero(std::size_t dim);

  std::size_t dim() const { return components_.size(); }
  const std::vector<Poly>& components() const { return components_; }
  const Poly& operator[](std::size_t i) const { return components_[i]; }

  Degree degree() const;
  bool is_zero() const;

  friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;

 private:
  std::vector<Poly> components_;
};

// P_i = x_i((1 - sum x_k^2) ftilde_i + sum_j atilde_ij x_j^2) with atilde skew-symmetric.
struct KolmogorovForm {
  std::size_t dim = 0;
  std::vector<Poly> ftilde;
  PolySquare atilde;

  // Throws DimMismatch or NotSkew.
  void validate() const;
};

// Cubic instance: constant ftilde = alpha and constant skew atilde.
struct CubicKolmogorovForm {
  std::size_t dim = 0;
  RationalVector alpha;
  RationalMatrix atilde;

  CubicKolmogorovForm() = default;
  CubicKolmogorovForm(RationalVector alpha, RationalMatrix atilde);
  static CubicKolmogorovForm zero(std::size_t dim);

  void validate() const;
  KolmogorovForm to_form() const;

  friend bool operator==(const CubicKolmogorovForm&, const CubicKolmogorovForm&) = default;
};

// Skew-completes `upper` (entries with i < j are read, the rest ignored).
RationalMatrix skew_from_upper(const RationalMatrix& upper);

// sum_i P_i * dP/dx_i. Throws DimMismatch.
Poly lie_derivative(const PolyVectorField& vf, const Poly& f);

PolyVectorField construct_from_form(const KolmogorovForm& form);
PolyVectorField assemble(const CubicKolmogorovForm& form);

// -2 sum ftilde_i x_i^2: the cofactor of the unit sphere for the field built from `form`.
Poly sphere_cofactor(const KolmogorovForm& form);

struct SphereReport {
  bool kolmogorov = false;
  // Q_i with P_i = x_i Q_i, filled only when kolmogorov.
  std::vector<Poly> quotients;
  // K with chi(sum x^2 - 1) = K (sum x^2 - 1), when it exists.
  std::optional<Poly> sphere_cofactor;

  bool sphere_invariant() const { return sphere_cofactor.has_value(); }
  bool on_sphere() const { return kolmogorov && sphere_invariant(); }
};

SphereReport is_kolmogorov_on_sphere(const PolyVectorField& vf);

// (alpha, atilde) when every P_i = x_i(alpha_i(1 - sum x^2) + sum_j atilde_ij x_j^2)
// with atilde skew; nullopt otherwise.
std::optional<CubicKolmogorovForm> recover_cubic_form(const PolyVectorField& vf);

struct HomogeneousReport {
  bool homogeneous = false;  // nonzero components homogeneous of one shared degree
  Degree degree;
  bool kolmogorov = false;
  bool tangent = false;  // sum_i P_i x_i == 0

  bool passes() const { return homogeneous && kolmogorov && tangent; }
};

HomogeneousReport classify_homogeneous(const PolyVectorField& vf);

}  // namespace kolmo
