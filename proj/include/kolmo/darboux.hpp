#pragma once

#include <optional>
#include <vector>

#include "kolmo/invariance.hpp"

namespace kolmo {

// H = prod_i surfaces_i ^ exponents_i. Never evaluated symbolically; it is certified by
// sum_i exponents_i K_i = 0 where K_i is the cofactor of surfaces_i.
class DarbouxIntegral {
 public:
  DarbouxIntegral(RationalVector exponents, std::vector<Hypersurface> surfaces);

  const RationalVector& exponents() const { return exponents_; }
  const std::vector<Hypersurface>& surfaces() const { return surfaces_; }

 private:
  RationalVector exponents_;
  std::vector<Hypersurface> surfaces_;
};

// x_1, ..., x_dim as hypersurfaces.
std::vector<Hypersurface> coordinate_surfaces(std::size_t dim);

// Row i: (alpha_i, atilde_i1 - alpha_i, ..., atilde_id - alpha_i); last row (k0, k_1..k_d).
RationalMatrix build_matrix_B(const CubicKolmogorovForm& form, const StructuredCofactor& extra);

// Overload for a general cofactor; throws UnstructuredCofactor when it is not k0 + sum k x^2.
RationalMatrix build_matrix_B(const CubicKolmogorovForm& form, const Cofactor& extra);

// One integral over (x_1, ..., x_d, g) per left-nullspace basis vector of B.
// Throws NotInvariant, UnstructuredCofactor.
std::vector<DarbouxIntegral> find_darboux(const CubicKolmogorovForm& form, const Hypersurface& g);

// sum beta_i K_i == 0 with K_i computed by exact division. Throws NotInvariant.
bool verify_first_integral(const PolyVectorField& vf, const DarbouxIntegral& integral);

// prod x_i^{y_i} for every y in the right nullspace of [alpha^T; atilde].
std::vector<DarbouxIntegral> syzygy_first_integral(const CubicKolmogorovForm& form);

// Skew polynomial matrix A with q_i = sum_j A_ij x_j^k. Throws NotASyzygy.
PolySquare decompose_syzygy(const std::vector<Poly>& q, unsigned k);

// q_i = sum_j A_ij x_j^k.
std::vector<Poly> reassemble_syzygy(const PolySquare& a, unsigned k);

// Builds a canonical form with ftilde = 0 whose field has a0 + sum a_i x_i as a first
// integral. seed is an n x n skew polynomial matrix for a field in dimension n + 1.
// Throws AllZeroCoefficients, ZeroSeed, NotSkew, DimMismatch.
KolmogorovForm construct_linear_fi_field(const HyperplaneSpec& hp, const PolySquare& seed);

struct CompletelyIntegrableFamily {
  PolyVectorField field;
  std::vector<DarbouxIntegral> integrals;  // sum x^2 - 1, then x_3, ..., x_{n+1}
  RationalVector sample_point;
  RationalMatrix jacobian;  // n x (n+1), gradients of the integrals at sample_point
  std::size_t jacobian_rank = 0;
};

// (A x1 x2^2, -A x1^2 x2, 0, ..., 0) on S^n with deg A = m - 3. Throws DegreeMismatch,
// PreconditionViolated.
CompletelyIntegrableFamily construct_completely_integrable(std::size_t n, unsigned m, const Poly& atilde);

// Nonzero coordinates only.
class SamplePoint {
 public:
  explicit SamplePoint(RationalVector coords);
  const RationalVector& coords() const { return coords_; }

 private:
  RationalVector coords_;
};

// samples[i][j] is z_ij for coordinate family i and point j.
using SampleGrid = std::vector<std::vector<SamplePoint>>;

// z_j = (1, ..., 2 at j, ..., 1), reused for every i.
SampleGrid default_samples(std::size_t dim);

// Rows j: (x_k dg/dx_k for k != i, -g) evaluated at samples[j].
RationalMatrix hypothesis_matrix(const Poly& g, std::size_t omit, const std::vector<SamplePoint>& samples);

struct IntegrabilityCertificate {
  std::size_t rank_B = 0;
  RationalMatrix matrix_B;
  std::vector<Rational> hypothesis_determinants;  // one per coordinate family i
  std::vector<DarbouxIntegral> integrals;         // n of them when completely integrable
  bool completely_integrable = false;
};

// Throws HypothesisFailed, NotInvariant, UnstructuredCofactor, PreconditionViolated.
IntegrabilityCertificate complete_integrability_check(const CubicKolmogorovForm& form, const Hypersurface& g,
                                                      const std::optional<SampleGrid>& samples = std::nullopt);

}  // namespace kolmo
