#include "kolmo/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "kolmo/errors.hpp"

namespace kolmo {

CompiledPoly::CompiledPoly(const Poly& p) {
  for (const auto& [m, c] : p.terms()) {
    Term t{to_double(c), {}};
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) t.powers.emplace_back(i, m[i]);
    terms_.push_back(std::move(t));
  }
}

double CompiledPoly::operator()(std::span<const double> x) const {
  double sum = 0;
  for (const auto& t : terms_) {
    double v = t.coeff;
    for (const auto& [i, e] : t.powers)
      for (unsigned k = 0; k < e; ++k) v *= x[i];
    sum += v;
  }
  return sum;
}

CompiledField::CompiledField(const PolyVectorField& vf) {
  for (const auto& p : vf.components()) components_.emplace_back(p);
}

void CompiledField::operator()(std::span<const double> x, std::span<double> out) const {
  for (std::size_t i = 0; i < components_.size(); ++i) out[i] = components_[i](x);
}

Trajectory integrate_rk4(const PolyVectorField& vf, std::span<const double> x0, double h, std::size_t steps) {
  if (!(h > 0)) throw PreconditionViolated("step size must be positive");
  if (steps < 1) throw PreconditionViolated("need at least one step");
  if (x0.size() != vf.dim()) throw DimMismatch("initial state has wrong length");

  const CompiledField f(vf);
  const std::size_t d = vf.dim();
  Trajectory traj;
  traj.h = h;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.states.emplace_back(x0.begin(), x0.end());

  std::vector<double> x(x0.begin(), x0.end()), k1(d), k2(d), k3(d), k4(d), tmp(d);
  for (std::size_t s = 1; s <= steps; ++s) {
    f(x, k1);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
    f(tmp, k2);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
    f(tmp, k3);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = x[i] + h * k3[i];
    f(tmp, k4);
    for (std::size_t i = 0; i < d; ++i) {
      x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(x[i])) throw NonFinite(s, "non-finite state at step " + std::to_string(s));
    }
    traj.times.push_back(static_cast<double>(s) * h);
    traj.states.push_back(x);
  }
  return traj;
}

double conservation_report(const Trajectory& traj, const DarbouxIntegral& integral, const DriftConfig& cfg) {
  std::vector<CompiledPoly> surfaces;
  for (const auto& s : integral.surfaces()) surfaces.emplace_back(s.defining());
  std::vector<double> beta;
  for (const auto& b : integral.exponents()) beta.push_back(to_double(b));

  auto log_h = [&](std::size_t step) {
    double l = 0;
    for (std::size_t i = 0; i < surfaces.size(); ++i) {
      if (beta[i] == 0) continue;
      const double v = std::fabs(surfaces[i](traj.states[step]));
      if (v < cfg.domain_floor) {
        std::ostringstream msg;
        msg << "|" << integral.surfaces()[i].defining().to_string() << "| = " << v << " below floor "
            << cfg.domain_floor << " at t = " << traj.times[step];
        throw DomainViolation(msg.str());
      }
      l += beta[i] * std::log(v);
    }
    return l;
  };

  const double l0 = log_h(0);
  const double scale = std::max(1.0, std::fabs(l0));
  double worst = 0;
  for (std::size_t s = 1; s < traj.states.size(); ++s) worst = std::max(worst, std::fabs(log_h(s) - l0) / scale);
  return worst;
}

void write_csv(std::ostream& out, const Trajectory& traj) {
  const std::size_t d = traj.states.empty() ? 0 : traj.states.front().size();
  out << 't';
  for (std::size_t i = 0; i < d; ++i) out << ",x" << i + 1;
  out << '\n';
  const auto old_precision = out.precision(17);
  for (std::size_t s = 0; s < traj.states.size(); ++s) {
    out << traj.times[s];
    for (double v : traj.states[s]) out << ',' << v;
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace kolmo
