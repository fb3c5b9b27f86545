#include "wproj/connection.hpp"

#include <sstream>
#include <stdexcept>

namespace wproj {

std::string Mismatch::describe() const {
  std::ostringstream os;
  os << condition << " fails at (" << row << "," << col << ")";
  if (!residual.is_zero()) os << ": residual " << residual.to_string();
  return os.str();
}

IdentityReport compare_matrices(const PuiseuxMatrix& lhs, const PuiseuxMatrix& rhs,
                                const std::string& condition) {
  if (lhs.size() != rhs.size()) return IdentityReport::fail(condition + " (size mismatch)", 0, 0);
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < lhs.size(); ++j)
      if (!(lhs(i, j) == rhs(i, j))) return IdentityReport::fail(condition, i, j, lhs(i, j) - rhs(i, j));
  return IdentityReport::ok();
}

namespace {

IdentityReport require_zero(const PuiseuxMatrix& m, const std::string& condition) {
  if (auto at = m.first_nonzero()) return IdentityReport::fail(condition, at->first, at->second, m(at->first, at->second));
  return IdentityReport::ok();
}

}  // namespace

PuiseuxMatrix Direction::differentiate(const PuiseuxMatrix& m) const {
  return kind == DifferentialKind::Logarithmic ? m.log_derivative(variable) : m.derivative(variable);
}

Puiseux Direction::differentiate(const Puiseux& p) const {
  return kind == DifferentialKind::Logarithmic ? p.log_derivative(variable) : p.derivative(variable);
}

const Direction& Connection::direction(std::string_view name) const {
  for (const auto& d : directions)
    if (d.name == name) return d;
  throw std::out_of_range("connection has no direction '" + std::string(name) + "'");
}

IdentityReport verify_flatness(const Connection& conn) {
  const PuiseuxMatrix& omega_t = conn.theta_part;
  for (const auto& dir : conn.directions) {
    if (dir.matrix.size() != omega_t.size())
      return IdentityReport::fail("matrix size of direction " + dir.name, 0, 0);
    PuiseuxMatrix curvature =
        dir.matrix.theta_log_derivative() - dir.differentiate(omega_t) + commutator(omega_t, dir.matrix);
    if (auto r = require_zero(curvature, "curvature(theta," + dir.name + ")"); !r) return r;
  }
  for (std::size_t a = 0; a < conn.directions.size(); ++a)
    for (std::size_t b = a + 1; b < conn.directions.size(); ++b) {
      const Direction& u = conn.directions[a];
      const Direction& v = conn.directions[b];
      PuiseuxMatrix curvature = u.differentiate(v.matrix) - v.differentiate(u.matrix) + commutator(u.matrix, v.matrix);
      if (auto r = require_zero(curvature, "curvature(" + u.name + "," + v.name + ")"); !r) return r;
    }
  return IdentityReport::ok();
}

namespace {

// Omega^T G + G sigma(Omega): the derivative the pairing must have.
PuiseuxMatrix pairing_variation(const PuiseuxMatrix& omega, const PuiseuxMatrix& g) {
  return omega.transpose() * g + g * omega.theta_flip();
}

}  // namespace

IdentityReport verify_pairing_flatness(const Connection& conn, const PuiseuxMatrix& pairing, int n) {
  for (std::size_t i = 0; i < pairing.size(); ++i)
    for (std::size_t j = 0; j < pairing.size(); ++j) {
      const Puiseux& e = pairing(i, j);
      if (e.is_zero()) continue;
      auto deg = e.uniform_theta_degree();
      if (!deg || *deg != n) {
        std::ostringstream os;
        os << "pairing entry (" << i << "," << j << ") = " << e.to_string() << " is not of theta-degree " << n;
        throw std::invalid_argument(os.str());
      }
    }
  {
    PuiseuxMatrix residual = pairing.theta_log_derivative() - pairing_variation(conn.theta_part, pairing);
    if (auto r = require_zero(residual, "pairing flatness(theta)"); !r) return r;
  }
  for (const auto& dir : conn.directions) {
    PuiseuxMatrix residual = dir.differentiate(pairing) - pairing_variation(dir.matrix, pairing);
    if (auto r = require_zero(residual, "pairing flatness(" + dir.name + ")"); !r) return r;
  }
  return IdentityReport::ok();
}

IdentityReport verify_adjoint(const PuiseuxMatrix& a, const PuiseuxMatrix& pairing, AdjointMode mode,
                              const Rational& scalar) {
  if (pairing.determinant().is_zero()) throw std::invalid_argument("verify_adjoint: singular pairing");
  PuiseuxMatrix residual = mode == AdjointMode::SelfAdjoint
                               ? pairing * a - a.transpose() * pairing
                               : pairing * a + a.transpose() * pairing - Puiseux(scalar) * pairing;
  return require_zero(residual, mode == AdjointMode::SelfAdjoint ? "G A = A^T G" : "G A + A^T G = r G");
}

Connection gauge_diagonal(const Connection& conn, const std::vector<Puiseux>& gauge) {
  const std::size_t n = conn.rank();
  if (gauge.size() != n) throw std::invalid_argument("gauge size mismatch");
  std::vector<Puiseux> inverse(n);
  for (std::size_t i = 0; i < n; ++i) inverse[i] = gauge[i].inverse();

  auto conjugate = [&](const PuiseuxMatrix& m) {
    PuiseuxMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!m(i, j).is_zero()) out(i, j) = inverse[i] * m(i, j) * gauge[j];
    return out;
  };

  Connection out;
  out.basis_labels = conn.basis_labels;
  out.theta_part = conjugate(conn.theta_part);
  for (std::size_t i = 0; i < n; ++i) out.theta_part(i, i) += inverse[i] * gauge[i].theta_log_derivative();
  for (const auto& dir : conn.directions) {
    Direction d = dir;
    d.matrix = conjugate(dir.matrix);
    for (std::size_t i = 0; i < n; ++i) d.matrix(i, i) += inverse[i] * dir.differentiate(gauge[i]);
    out.directions.push_back(std::move(d));
  }
  return out;
}

PuiseuxMatrix gauge_pairing(const PuiseuxMatrix& pairing, const std::vector<Puiseux>& gauge) {
  const std::size_t n = pairing.size();
  if (gauge.size() != n) throw std::invalid_argument("gauge size mismatch");
  PuiseuxMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!pairing(i, j).is_zero()) out(i, j) = gauge[i] * gauge[j].theta_flip() * pairing(i, j);
  return out;
}

IdentityReport compare_connections(const Connection& lhs, const Connection& rhs) {
  if (auto r = compare_matrices(lhs.theta_part, rhs.theta_part, "theta part"); !r) return r;
  if (lhs.directions.size() != rhs.directions.size())
    return IdentityReport::fail("number of directions", 0, 0);
  for (std::size_t k = 0; k < lhs.directions.size(); ++k) {
    const auto& a = lhs.directions[k];
    const auto& b = rhs.directions[k];
    if (a.variable != b.variable || a.kind != b.kind)
      return IdentityReport::fail("direction " + a.name + " kind/variable", 0, 0);
    if (auto r = compare_matrices(a.matrix, b.matrix, "direction " + a.name); !r) return r;
  }
  return IdentityReport::ok();
}

}  // namespace wproj
