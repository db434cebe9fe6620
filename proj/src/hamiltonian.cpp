#include "kolmo/hamiltonian.hpp"

#include <map>

#include "kolmo/errors.hpp"

namespace kolmo {

HamiltonianReport is_hamiltonian(const PolyVectorField& vf) {
  const std::size_t d = vf.dim();
  if (d % 2 != 0) throw OddDimension("Hamiltonian test needs even dimension, got " + std::to_string(d));

  std::vector<Poly> g;
  for (std::size_t i = 0; i < d; i += 2) {
    g.push_back(vf[i + 1]);
    g.push_back(-vf[i]);
  }
  HamiltonianReport report;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) {
      Poly defect = g[j].derivative(k) - g[k].derivative(j);
      if (!defect.is_zero()) report.defects.push_back({j, k, std::move(defect)});
    }
  }
  return report;
}

CubicKolmogorovForm form_from_parameters(std::size_t dim, const RationalVector& params) {
  if (params.size() != dim + dim * (dim - 1) / 2) throw DimMismatch("wrong parameter count");
  RationalVector alpha(params.begin(), params.begin() + static_cast<std::ptrdiff_t>(dim));
  RationalMatrix upper(dim, dim);
  std::size_t p = dim;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) upper(i, j) = params[p++];
  return CubicKolmogorovForm(std::move(alpha), skew_from_upper(upper));
}

ConstraintSpace hamiltonian_constraint_space(std::size_t n) {
  if (n < 1) throw PreconditionViolated("n must be at least 1");
  const std::size_t d = 2 * n;
  const std::size_t count = d + d * (d - 1) / 2;

  ConstraintSpace space;
  for (std::size_t i = 0; i < d; ++i) space.parameter_names.push_back("alpha" + std::to_string(i + 1));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      space.parameter_names.push_back("atilde" + std::to_string(i + 1) + "_" + std::to_string(j + 1));

  // Row key: (j, k, monomial) of a defect coefficient.
  using RowKey = std::pair<std::pair<std::size_t, std::size_t>, Monomial>;
  std::map<RowKey, RationalVector> rows;
  for (std::size_t p = 0; p < count; ++p) {
    RationalVector unit(count);
    unit[p] = 1;
    const HamiltonianReport rep = is_hamiltonian(assemble(form_from_parameters(d, unit)));
    for (const auto& defect : rep.defects) {
      for (const auto& [m, c] : defect.defect.terms()) {
        auto& row = rows[{{defect.row, defect.col}, m}];
        if (row.empty()) row.resize(count);
        row[p] = c;
      }
    }
  }
  std::vector<RationalVector> stacked;
  for (auto& [key, row] : rows) stacked.push_back(std::move(row));
  space.constraints = RationalMatrix::from_rows(stacked, count);
  space.basis = nullspace(space.constraints, NullSide::Right);
  space.dimension = space.basis.size();
  return space;
}

}  // namespace kolmo
