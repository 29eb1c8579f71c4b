#pragma once

#include <json.hpp>

#include "quasiper/analysis.hpp"
#include "quasiper/ehrhart.hpp"
#include "quasiper/genfunc.hpp"
#include "quasiper/quasipoly.hpp"

namespace quasiper {

using Json = nlohmann::json;

// Rationals are always strings ("a/b" or "a"); integers may be JSON numbers
// or strings on input.

Json to_json(const QuasiPolynomial& q);
QuasiPolynomial quasipolynomial_from_json(const Json& j);

Json to_json(const SimplexSpec& s);
SimplexSpec simplex_from_json(const Json& j);

Json to_json(const HPolytope& p);
HPolytope hpolytope_from_json(const Json& j);

/// {"numerator": [...], "den_factors": [[n, e], ...], "unit": "u"}
Json to_json(const RationalGF& r);
RationalGF gf_from_json(const Json& j);

Json to_json(const CyclotomicFactors& poles);
Json to_json(const ConjectureInstance& inst);
Json to_json(const ZaslavskyReport& report);

}  // namespace quasiper
