#include "kolmo/io.hpp"

#include <fstream>

#include "kolmo/errors.hpp"

namespace kolmo::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw PreconditionViolated(std::string("missing JSON field \"") + key + "\"");
  return j.at(key);
}

std::size_t read_dim(const json& j) {
  const json& d = field(j, "dim");
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0)
    throw PreconditionViolated("\"dim\" must be a positive integer");
  return d.get<std::size_t>();
}

Poly poly_from_json(const json& j, std::size_t dim) {
  if (!j.is_string()) throw PreconditionViolated("polynomials are serialized as strings");
  return parse(j.get<std::string>(), dim);
}

}  // namespace

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  throw PreconditionViolated("rationals are serialized as \"p/q\" strings");
}

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

PolyVectorField field_from_json(const json& j, std::optional<std::size_t> dim_override) {
  std::size_t dim = dim_override.value_or(0);
  if (j.contains("dim")) {
    const std::size_t file_dim = read_dim(j);
    if (dim_override && *dim_override != file_dim)
      throw DimMismatch("--dim " + std::to_string(*dim_override) + " disagrees with file dim " + std::to_string(file_dim));
    dim = file_dim;
  }
  if (dim == 0) throw PreconditionViolated("field dimension must be given explicitly");
  const json& comps = field(j, "components");
  if (!comps.is_array() || comps.size() != dim)
    throw DimMismatch("\"components\" must hold exactly " + std::to_string(dim) + " polynomials");
  std::vector<Poly> polys;
  for (const auto& c : comps) polys.push_back(poly_from_json(c, dim));
  return PolyVectorField(std::move(polys));
}

json to_json(const PolyVectorField& vf) {
  json comps = json::array();
  for (const auto& p : vf.components()) comps.push_back(p.to_string());
  return {{"dim", vf.dim()}, {"components", comps}};
}

CubicKolmogorovForm form_from_json(const json& j) {
  const std::size_t dim = read_dim(j);
  const json& alpha = field(j, "alpha");
  const json& atilde = field(j, "atilde");
  if (!alpha.is_array() || alpha.size() != dim) throw DimMismatch("\"alpha\" must have dim entries");
  if (!atilde.is_array() || atilde.size() != dim) throw DimMismatch("\"atilde\" must have dim rows");
  RationalVector a;
  for (const auto& x : alpha) a.push_back(rational_from_json(x));
  RationalMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!atilde[r].is_array() || atilde[r].size() != dim) throw DimMismatch("\"atilde\" must be square");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = rational_from_json(atilde[r][c]);
  }
  return CubicKolmogorovForm(std::move(a), std::move(m));
}

json to_json(const CubicKolmogorovForm& form) {
  return {{"dim", form.dim}, {"alpha", to_json(form.alpha)}, {"atilde", to_json(form.atilde)}};
}

json to_json(const KolmogorovForm& form) {
  json ft = json::array();
  for (const auto& p : form.ftilde) ft.push_back(p.to_string());
  json at = json::array();
  for (const auto& row : form.atilde) {
    json r = json::array();
    for (const auto& p : row) r.push_back(p.to_string());
    at.push_back(r);
  }
  return {{"dim", form.dim}, {"ftilde", ft}, {"atilde", at}};
}

PolySquare seed_from_json(const json& j) {
  const std::size_t dim = read_dim(j);
  const json& skew = field(j, "skew");
  if (!skew.is_array() || skew.size() + 1 != dim)
    throw DimMismatch("\"skew\" must have dim - 1 rows");
  PolySquare out;
  for (const auto& row : skew) {
    if (!row.is_array() || row.size() + 1 != dim) throw DimMismatch("\"skew\" must be square");
    std::vector<Poly> r;
    for (const auto& e : row) r.push_back(poly_from_json(e, dim));
    out.push_back(std::move(r));
  }
  return out;
}

json to_json(const DarbouxIntegral& integral) {
  json surfaces = json::array();
  for (const auto& s : integral.surfaces()) surfaces.push_back(s.defining().to_string());
  return {{"exponents", to_json(integral.exponents())}, {"surfaces", surfaces}};
}

json to_json(const IntegrabilityCertificate& cert) {
  json integrals = json::array();
  for (const auto& i : cert.integrals) integrals.push_back(to_json(i));
  return {{"rank_B", cert.rank_B},
          {"matrix_B", to_json(cert.matrix_B)},
          {"integrals", integrals},
          {"hypothesis", {{"checked", true}, {"determinants", to_json(cert.hypothesis_determinants)}}},
          {"completely_integrable", cert.completely_integrable}};
}

json to_json(const Cofactor& k) {
  json out = {{"cofactor", k.poly.to_string()}};
  if (k.structured) {
    out["structured"] = {{"k0", to_json(k.structured->k0)}, {"k", to_json(k.structured->k)}};
  } else {
    out["structured"] = nullptr;
  }
  return out;
}

json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionViolated("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw PreconditionViolated(path.string() + ": " + e.what());
  }
}

}  // namespace kolmo::io
