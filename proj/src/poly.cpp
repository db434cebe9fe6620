#include "kolmo/poly.hpp"

#include <numeric>
#include <sstream>

#include "kolmo/errors.hpp"

namespace kolmo {

namespace {

void require_same_dim(const Poly& a, const Poly& b) {
  if (a.dim() != b.dim()) {
    throw DimMismatch("polynomial dimensions differ: " + std::to_string(a.dim()) + " vs " +
                      std::to_string(b.dim()));
  }
}

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

}  // namespace

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly Poly::constant(std::size_t dim, const Rational& c) {
  Poly p(dim);
  p.add_term(Monomial(dim, 0), c);
  return p;
}

Poly Poly::variable(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw IndexOutOfRange("variable x" + std::to_string(index + 1) + " exceeds dimension " +
                          std::to_string(dim));
  }
  Monomial m(dim, 0);
  m[index] = 1;
  return term(m, 1);
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p(m.size());
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coefficient(Monomial(dim_, 0)); }

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != dim_) throw DimMismatch("monomial length does not match dimension");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_dim(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  require_same_dim(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  require_same_dim(lhs, rhs);
  Poly out(lhs.dim());
  Monomial prod(lhs.dim());
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ma[i] + mb[i];
      out.add_term(prod, ca * cb);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(dim_, 1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= dim_) {
    throw IndexOutOfRange("cannot differentiate by x" + std::to_string(var + 1) +
                          " in dimension " + std::to_string(dim_));
  }
  Poly out(dim_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    out.add_term(d, c * m[var]);
  }
  return out;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != dim_) throw DimMismatch("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

Degree Poly::degree() const {
  if (terms_.empty()) return kNegInf;
  return total_degree(terms_.begin()->first);
}

DegreeInfo Poly::degree_info() const {
  DegreeInfo info{degree(), true};
  for (const auto& [m, c] : terms_) {
    if (total_degree(m) != *info.degree) {
      info.homogeneous = false;
      break;
    }
  }
  return info;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'x' + std::to_string(i + 1);
      if (m[i] > 1) mono += '^' + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out << kolmo::to_string(mag);
    } else if (mag == 1) {
      out << mono;
    } else {
      out << kolmo::to_string(mag) << '*' << mono;
    }
  }
  return out.str();
}

std::optional<Poly> divide_exact(const Poly& dividend, const Poly& divisor) {
  require_same_dim(dividend, divisor);
  if (divisor.is_zero()) throw ZeroDivisor("division by the zero polynomial");

  const auto& [lead_m, lead_c] = *divisor.terms().begin();
  Poly remaining = dividend;
  Poly quotient(dividend.dim());
  Monomial shift(dividend.dim());
  while (!remaining.is_zero()) {
    const auto& [m, c] = *remaining.terms().begin();
    // With one divisor, a leading term that is not divisible lands in the remainder
    // and can never be cancelled by later steps.
    if (!divides(lead_m, m)) return std::nullopt;
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = m[i] - lead_m[i];
    const Poly step = Poly::term(shift, c / lead_c);
    quotient += step;
    remaining -= step * divisor;
  }
  return quotient;
}

Poly sphere_polynomial(std::size_t dim, const Rational& radius) {
  Poly s = Poly::constant(dim, -radius * radius);
  for (std::size_t i = 0; i < dim; ++i) {
    Monomial m(dim, 0);
    m[i] = 2;
    s.add_term(m, 1);
  }
  return s;
}

}  // namespace kolmo
