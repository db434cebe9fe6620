#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "kolmo/darboux.hpp"

namespace kolmo {

// Double-precision evaluator for a Poly.
class CompiledPoly {
 public:
  explicit CompiledPoly(const Poly& p);
  double operator()(std::span<const double> x) const;

 private:
  struct Term {
    double coeff;
    std::vector<std::pair<std::size_t, unsigned>> powers;
  };
  std::vector<Term> terms_;
};

class CompiledField {
 public:
  explicit CompiledField(const PolyVectorField& vf);
  std::size_t dim() const { return components_.size(); }
  void operator()(std::span<const double> x, std::span<double> out) const;

 private:
  std::vector<CompiledPoly> components_;
};

// Fixed-step samples t_0 = 0, t_k = k h.
struct Trajectory {
  double h = 0;
  std::vector<double> times;
  std::vector<std::vector<double>> states;
};

// Classical fourth-order Runge-Kutta. Throws PreconditionViolated, DimMismatch, NonFinite.
Trajectory integrate_rk4(const PolyVectorField& vf, std::span<const double> x0, double h, std::size_t steps);

struct DriftConfig {
  double domain_floor = 1e-12;  // smallest admissible |f_i(x)|
  double max_drift = 1e-6;      // default acceptance for h = 1e-3, T <= 10
};

// max_t |L(t) - L(0)| / max(1, |L(0)|) with L = sum beta_i log|f_i(x(t))|.
// Throws DomainViolation when some |f_i| drops below the floor.
double conservation_report(const Trajectory& traj, const DarbouxIntegral& integral, const DriftConfig& cfg = {});

// Header "t,x1,...,xd", then one row per step with 17 significant digits.
void write_csv(std::ostream& out, const Trajectory& traj);

}  // namespace kolmo
