#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kolmo/field.hpp"

namespace kolmo {

struct JacobianDefect {
  std::size_t row = 0;  // 0-based j < k
  std::size_t col = 0;
  Poly defect;          // dG_j/dx_k - dG_k/dx_j
};

struct HamiltonianReport {
  std::vector<JacobianDefect> defects;
  bool is_hamiltonian() const { return defects.empty(); }
};

// The field is Hamiltonian for the standard pairing (x_{2i-1}, x_{2i}) iff the rearranged
// field G = (P_2, -P_1, P_4, -P_3, ...) has a symmetric Jacobian. Throws OddDimension.
HamiltonianReport is_hamiltonian(const PolyVectorField& vf);

struct ConstraintSpace {
  std::size_t dimension = 0;
  // Parameter order: alpha_1..alpha_{2n}, then atilde_ij for i < j in row-major order.
  std::vector<std::string> parameter_names;
  std::vector<RationalVector> basis;
  RationalMatrix constraints;  // rows: defect coefficients, cols: parameters
};

// Cubic form built from a parameter vector laid out as in ConstraintSpace.
CubicKolmogorovForm form_from_parameters(std::size_t dim, const RationalVector& params);

// Exact solution space of the Hamiltonian conditions over the cubic Kolmogorov fields on
// S^{2n-1}. Columns are assembled from unit parameter vectors; the defect map is linear.
ConstraintSpace hamiltonian_constraint_space(std::size_t n);

}  // namespace kolmo
