#include "wproj/serialize.hpp"

#include <string>

namespace wproj {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Puiseux& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json m;
    m["coeff"] = to_string(c);
    m["x_exp"] = to_string(e.x_exp(0));
    m["theta_exp"] = e.theta;
    if (e.x.size() > 1) {
      Json all = Json::array();
      for (const auto& r : e.x) all.push_back(to_string(r));
      m["x_exps"] = std::move(all);
    }
    out.push_back(std::move(m));
  }
  return out;
}

Json to_json(const PuiseuxMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RationalMatrix& m) { return to_json(m.to_puiseux()); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw InputError("rational must be a \"p/q\" string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

Puiseux puiseux_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("Puiseux element must be a list of monomials");
  Puiseux out;
  for (const auto& m : j) {
    if (!m.is_object() || !m.contains("coeff") || !m.contains("x_exp") || !m.contains("theta_exp"))
      throw InputError("monomial needs coeff, x_exp and theta_exp: " + m.dump());
    if (!m["theta_exp"].is_number_integer()) throw InputError("theta_exp must be an integer");
    std::vector<Rational> xs;
    if (m.contains("x_exps")) {
      if (!m["x_exps"].is_array()) throw InputError("x_exps must be a list");
      for (const auto& r : m["x_exps"]) xs.push_back(rational_from_json(r));
      if (xs.empty() ? rational_from_json(m["x_exp"]) != 0 : xs[0] != rational_from_json(m["x_exp"]))
        throw InputError("x_exp disagrees with x_exps[0]");
    } else {
      xs.push_back(rational_from_json(m["x_exp"]));
    }
    out += Puiseux::monomial(rational_from_json(m["coeff"]), Exponent(std::move(xs), m["theta_exp"].get<int>()));
  }
  return out;
}

PuiseuxMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be a list of rows");
  const std::size_t n = j.size();
  PuiseuxMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw InputError("matrix row " + std::to_string(i) + " has wrong length");
    for (std::size_t k = 0; k < n; ++k) out(i, k) = puiseux_from_json(j[i][k]);
  }
  return out;
}

}  // namespace wproj
