#pragma once

// JSON forms of exact data. A rational is the string "p/q". A monomial is
// {"coeff": "p/q", "x_exp": "r/s", "theta_exp": k}, plus "x_exps" (all
// exponents) when variables beyond x_0 occur. A Puiseux element is a list of
// monomials and a matrix a dense row-major list of rows.

#include <nlohmann/json.hpp>

#include "wproj/linear_algebra.hpp"
#include "wproj/puiseux.hpp"

namespace wproj {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Json to_json(const Puiseux& p);
Json to_json(const PuiseuxMatrix& m);
Json to_json(const RationalMatrix& m);

/// These throw InputError on malformed input.
Rational rational_from_json(const Json& j);
Puiseux puiseux_from_json(const Json& j);
PuiseuxMatrix matrix_from_json(const Json& j);

}  // namespace wproj
