#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>

#include "kolmo/darboux.hpp"
#include "kolmo/hamiltonian.hpp"

namespace kolmo::io {

using nlohmann::json;

// Rationals travel as "p/q" strings; plain JSON integers are accepted on input.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const RationalVector& v);
json to_json(const RationalMatrix& m);

// {"dim": d, "components": ["<poly>", ...]}. `dim` overrides the file when given; the
// two must agree otherwise. Throws Error subclasses on malformed input.
PolyVectorField field_from_json(const json& j, std::optional<std::size_t> dim = std::nullopt);
json to_json(const PolyVectorField& vf);

// {"dim": d, "alpha": ["<rational>", ...], "atilde": [["<rational>", ...], ...]}
CubicKolmogorovForm form_from_json(const json& j);
json to_json(const CubicKolmogorovForm& form);

// {"dim": d, "ftilde": ["<poly>", ...], "atilde": [["<poly>", ...], ...]}
json to_json(const KolmogorovForm& form);

// Seed skew matrix for the linear first-integral construction:
// {"dim": d, "skew": [["<poly>", ...], ...]} with (d-1) x (d-1) entries in d variables.
PolySquare seed_from_json(const json& j);

json to_json(const DarbouxIntegral& integral);
json to_json(const IntegrabilityCertificate& cert);
json to_json(const Cofactor& k);

json load_file(const std::filesystem::path& path);

}  // namespace kolmo::io
