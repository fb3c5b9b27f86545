#include "wproj/unfolding.hpp"

#include <string>

namespace wproj {

namespace {

IdentityReport require_zero(const RationalMatrix& m, const std::string& condition) {
  if (auto at = m.first_nonzero()) return IdentityReport::fail(condition, at->first, at->second, Puiseux(m(at->first, at->second)));
  return IdentityReport::ok();
}

std::string idx(std::size_t i) { return std::to_string(i); }

// Coefficient of theta^s in every entry, as a matrix over the remaining variables.
PuiseuxMatrix theta_coefficient(const PuiseuxMatrix& m, int s) {
  return m.map([s](const Puiseux& e) {
    Puiseux out;
    for (const auto& [exp, c] : e.terms())
      if (exp.theta == s) out += Puiseux::monomial(c, Exponent(exp.x, 0));
    return out;
  });
}

}  // namespace

RationalMatrix AffineMatrix::at(const RationalVector& x) const {
  RationalMatrix out = constant;
  for (std::size_t i = 0; i < linear.size(); ++i)
    if (x[i] != 0) out += x[i] * linear[i];
  return out;
}

PuiseuxMatrix AffineMatrix::to_puiseux() const {
  PuiseuxMatrix out = constant.to_puiseux();
  for (std::size_t i = 0; i < linear.size(); ++i)
    if (!linear[i].is_zero()) out += Puiseux::x_power(1, 1, 0, i) * linear[i].to_puiseux();
  return out;
}

std::vector<RationalMatrix> unfolding_matrices(const WeightData& wd, const SpectrumData& sd) {
  const std::size_t mu = wd.mu;
  const Rational inv_ww = Rational(1) / Rational(wd.w_pow_w);
  std::vector<RationalMatrix> out;
  for (std::size_t i = 0; i < mu; ++i) {
    RationalMatrix c(mu);
    for (std::size_t j = 0; j < mu; ++j) {
      if (i + j >= mu) {
        if (1 + sd.c[i + j - mu] == sd.c[i] + sd.c[j]) c(i + j - mu, j) = -inv_ww;
      } else if (sd.c[i + j] == sd.c[i] + sd.c[j]) {
        c(i + j, j) = -1;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

AffineMatrix a_tilde(const SpectrumData& sd, const std::vector<RationalMatrix>& C) {
  const std::size_t mu = C.size();
  AffineMatrix a;
  a.constant = Rational(-static_cast<long>(mu)) * C[1];
  for (std::size_t i = 0; i < mu; ++i)
    a.linear.push_back(i == 1 ? RationalMatrix(mu) : Rational(sd.alpha[i] - 1) * C[i]);
  return a;
}

EulerField euler_field(const SpectrumData& sd) {
  const std::size_t mu = sd.alpha.size();
  EulerField e{RationalVector(mu), RationalVector(mu)};
  for (std::size_t i = 0; i < mu; ++i) {
    if (i == 1) e.constant[i] = Rational(static_cast<long>(mu));
    else e.linear[i] = 1 - sd.alpha[i];
  }
  return e;
}

Connection unfolded_connection(const SpectrumData& sd, const std::vector<RationalMatrix>& C, const AffineMatrix& a) {
  const std::size_t mu = C.size();
  const Puiseux inv_theta = Puiseux::theta_power(-1);
  Connection conn;
  for (std::size_t k = 0; k < mu; ++k) conn.basis_labels.push_back("e" + idx(k));
  conn.theta_part = inv_theta * a.to_puiseux() + RationalMatrix::diagonal(sd.alpha).to_puiseux();
  for (std::size_t i = 0; i < mu; ++i)
    conn.directions.push_back({"x" + idx(i), i, DifferentialKind::Plain, inv_theta * C[i].to_puiseux()});
  return conn;
}

std::vector<Rational> potential_coefficients(const std::vector<RationalMatrix>& C, const RationalMatrix& g) {
  const std::size_t mu = C.size();
  std::vector<Rational> out(mu * mu * mu);
  const RationalVector e0 = unit_vector(mu, 0);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) {
      const RationalVector v = C[i] * (C[j] * e0);
      for (std::size_t k = 0; k < mu; ++k) {
        Rational s = 0;
        for (std::size_t l = 0; l < mu; ++l)
          if (v[l] != 0) s += v[l] * g(l, k);
        out[(i * mu + j) * mu + k] = s;
      }
    }
  return out;
}

Puiseux cubic_potential(const UnfoldingPackage& pkg) {
  const std::size_t mu = pkg.mu;
  Puiseux psi;
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j)
      for (std::size_t k = 0; k < mu; ++k)
        if (pkg.c(i, j, k) != 0)
          psi += Puiseux::x_power(Rational(pkg.c(i, j, k) / 6), 1, 0, i) * Puiseux::x_power(1, 1, 0, j) *
                 Puiseux::x_power(1, 1, 0, k);
  return psi;
}

Puiseux manifold_potential(std::size_t mu) {
  Puiseux psi;
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; i + j < mu; ++j)
      psi += Puiseux::x_power(make_rational(1, 6), 1, 0, i) * Puiseux::x_power(1, 1, 0, j) *
             Puiseux::x_power(1, 1, 0, mu - 1 - i - j);
  return psi;
}

UnfoldingPackage build_unfolding(const WeightData& wd, const SpectrumData& sd, const LimitPackage& lim) {
  UnfoldingPackage pkg;
  pkg.mu = wd.mu;
  pkg.C = unfolding_matrices(wd, sd);
  pkg.A_tilde = a_tilde(sd, pkg.C);
  pkg.euler = euler_field(sd);
  pkg.potential = potential_coefficients(pkg.C, lim.g_bar);
  return pkg;
}

IdentityReport verify_unfolding_identities(const SpectrumData& sd, const UnfoldingPackage& pkg,
                                           const PuiseuxMatrix& s_bar) {
  const std::size_t mu = pkg.mu;
  const RationalMatrix a_inf = RationalMatrix::diagonal(sd.alpha);
  for (std::size_t i = 0; i < mu; ++i) {
    const RationalMatrix& ci = pkg.C[i];
    for (std::size_t j = i + 1; j < mu; ++j)
      if (auto r = require_zero(commutator(ci, pkg.C[j]), "[C_" + idx(i) + ",C_" + idx(j) + "] = 0"); !r) return r;
    const RationalMatrix bracket = commutator(a_inf, ci);
    if (auto r = require_zero(bracket - sd.alpha[i] * ci, "[A_inf,C_" + idx(i) + "] = alpha C"); !r) return r;
    if (auto r = require_zero(commutator(pkg.A_tilde.constant, ci), "[A_tilde,C_" + idx(i) + "] = 0 (constant)"); !r)
      return r;
    for (std::size_t v = 0; v < mu; ++v)
      if (auto r = require_zero(commutator(pkg.A_tilde.linear[v], ci),
                                "[A_tilde,C_" + idx(i) + "] = 0 (x" + idx(v) + " part)");
          !r)
        return r;
    if (auto r = require_zero(pkg.A_tilde.linear[i] + ci - bracket, "dA_tilde/dx_" + idx(i) + " + C = [A_inf,C]"); !r)
      return r;
    if (auto r = verify_adjoint(ci.to_puiseux(), s_bar, AdjointMode::SelfAdjoint); !r) {
      r.failure->condition = "C_" + idx(i) + " self-adjoint";
      return r;
    }
  }
  return IdentityReport::ok();
}

VerdictList verify_unfolding(const WeightData& wd, const SpectrumData& sd, const LimitPackage& lim,
                             const UnfoldingPackage& pkg) {
  VerdictList out;
  const std::size_t mu = wd.mu;
  const int n = static_cast<int>(wd.n);

  out.push_back(make_verdict("sec_unfolding.identities", verify_unfolding_identities(sd, pkg, lim.S_bar)));
  const Connection conn = unfolded_connection(sd, pkg.C, pkg.A_tilde);
  out.push_back(make_verdict("sec_unfolding.flatness", verify_flatness(conn)));
  out.push_back(make_verdict("sec_unfolding.pairing_flatness", verify_pairing_flatness(conn, lim.S_bar, n)));
  {
    IdentityReport r = require_zero(Rational(-static_cast<long>(mu)) * pkg.C[1] - lim.A0_bar, "-mu C_1 = A0_bar");
    if (r) r = require_zero(pkg.A_tilde.at(RationalVector(mu)) - lim.A0_bar, "A_tilde(0) = A0_bar");
    out.push_back(make_verdict("sec_unfolding.a0_bar_limit", r));
  }
  {
    IdentityReport r;
    for (std::size_t i = 0; i < mu && r; ++i) r = require_zero(pkg.C[i] + lim.cup.mult[i], "C_" + idx(i) + " = -(w_" + idx(i) + " cup)");
    out.push_back(make_verdict("sec_unfolding.c_is_cup", r));
  }
  {
    RationalMatrix period(mu);
    for (std::size_t i = 0; i < mu; ++i) {
      const RationalVector col = pkg.C[i] * unit_vector(mu, 0);
      for (std::size_t k = 0; k < mu; ++k) period(k, i) = -col[k];
    }
    out.push_back(make_verdict("cor_existfrobcan.period_map",
                               require_zero(period - RationalMatrix::identity(mu), "phi(d/dx_i) = e_i")));
  }
  {
    bool ok = true;
    std::string detail = "ok";
    for (std::size_t i = 0; i < mu && ok; ++i)
      for (std::size_t j = 0; j < mu && ok; ++j)
        for (std::size_t k = 0; k < mu && ok; ++k) {
          const Rational& c = pkg.c(i, j, k);
          if (c != pkg.c(j, i, k) || c != pkg.c(i, k, j) || c != pkg.c(k, j, i)) {
            ok = false;
            detail = "c_" + idx(i) + idx(j) + idx(k) + " not symmetric";
          }
        }
    out.push_back(make_verdict("cor_existfrobcan.potential_symmetry", ok, detail));
  }
  {
    bool ok = true;
    for (std::size_t j = 0; j < mu; ++j)
      for (std::size_t k = 0; k < mu; ++k) ok = ok && pkg.c(0, j, k) == lim.g_bar(j, k);
    out.push_back(make_verdict("cor_existfrobcan.unit_axiom", ok));
  }
  {
    bool ok = true;
    std::string detail = "ok";
    const Rational target = 3 - Rational(n);
    for (std::size_t i = 0; i < mu && ok; ++i)
      for (std::size_t j = 0; j < mu && ok; ++j)
        for (std::size_t k = 0; k < mu && ok; ++k)
          if (pkg.c(i, j, k) != 0 && (1 - sd.alpha[i]) + (1 - sd.alpha[j]) + (1 - sd.alpha[k]) != target) {
            ok = false;
            detail = "weight of x_" + idx(i) + "x_" + idx(j) + "x_" + idx(k) + " is not 3-n";
          }
    out.push_back(make_verdict("cor_existfrobcan.potential_homogeneity", ok, detail));
  }
  {
    // A_tilde = -sum_i E^i C_i, coefficientwise in x.
    AffineMatrix e{RationalMatrix(mu), std::vector<RationalMatrix>(mu, RationalMatrix(mu))};
    for (std::size_t i = 0; i < mu; ++i) {
      e.constant -= pkg.euler.constant[i] * pkg.C[i];
      e.linear[i] -= pkg.euler.linear[i] * pkg.C[i];
    }
    IdentityReport r = require_zero(e.constant - pkg.A_tilde.constant, "A_tilde = -E.C (constant)");
    for (std::size_t i = 0; i < mu && r; ++i)
      r = require_zero(e.linear[i] - pkg.A_tilde.linear[i], "A_tilde = -E.C (x" + idx(i) + ")");
    for (std::size_t i = 0; i < mu && r; ++i) {
      const Rational lin = i == 1 ? Rational(0) : Rational(1 - sd.alpha[i]);
      const Rational con = i == 1 ? Rational(static_cast<long>(mu)) : Rational(0);
      if (pkg.euler.linear[i] != lin || pkg.euler.constant[i] != con)
        r = IdentityReport::fail("Euler component", i, 0);
    }
    out.push_back(make_verdict("cor_existfrobcan.euler", r));
  }
  if (wd.is_manifold()) {
    const Puiseux psi = manifold_potential(mu);
    IdentityReport r = compare_matrices(PuiseuxMatrix::diagonal({cubic_potential(pkg)}), PuiseuxMatrix::diagonal({psi}),
                                        "cubic part of the potential");
    for (std::size_t i = 0; i < mu && r; ++i)
      for (std::size_t j = 0; j < mu && r; ++j)
        for (std::size_t k = 0; k < mu && r; ++k) {
          const Rational closed = i + j + k == mu - 1 ? Rational(1) : Rational(0);
          const Puiseux third = psi.derivative(i).derivative(j).derivative(k);
          if (pkg.c(i, j, k) != closed || !(third == Puiseux(closed)))
            r = IdentityReport::fail("c_ijk = [i+j+k = mu-1] at " + idx(k), i, j);
        }
    out.push_back(make_verdict("remark_potential.manifold_closed_form", r));
  }
  return out;
}

RationalMatrix pairing_at_zero(const PuiseuxMatrix& pairing, int n) {
  const std::size_t mu = pairing.size();
  RationalMatrix out(mu);
  const Exponent top({}, n);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) out(i, j) = pairing(i, j).at_zero(0).coefficient(top);
  return out;
}

VerdictList log_structure_checks(const WeightData& wd, const AModelPackage& a, const BModelPackage& b) {
  VerdictList out;
  const std::size_t mu = wd.mu;
  const std::size_t n = wd.n;
  const bool manifold = wd.is_manifold();

  const std::size_t rank_b = pairing_at_zero(b.S_B, static_cast<int>(n)).rank();
  out.push_back(make_verdict("prop_LogSTF.rank_S_B", rank_b == n + 1,
                             "rank " + std::to_string(rank_b) + ", expected " + std::to_string(n + 1)));
  out.push_back(make_verdict("prop_LogSTF.metric_dichotomy", (rank_b == mu) == manifold));

  const RationalMatrix phi0 =
      RationalMatrix::from_constant(theta_coefficient(b.conn_phi.direction("x").matrix, -1).at_zero(0));
  const RationalMatrix expected = Rational(-1, static_cast<unsigned long>(mu)) * RationalMatrix::from_constant(b.A0_phi.at_zero(0));
  out.push_back(make_verdict("cor_logFrob.phi_at_zero", require_zero(phi0 - expected, "Phi|0 = -A0(0)/mu")));
  const std::size_t generated = krylov_dimension(phi0, unit_vector(mu, 0));
  out.push_back(make_verdict("cor_logFrob.generation", generated == mu,
                             "iterates of e0 span dimension " + std::to_string(generated)));
  {
    const RationalVector image = phi0 * unit_vector(mu, 0);
    bool nonzero = false;
    for (const auto& v : image) nonzero = nonzero || v != 0;
    out.push_back(make_verdict("cor_logFrob.period_injective", nonzero));
  }
  const std::size_t rank_a = pairing_at_zero(a.pairing_P, static_cast<int>(n)).rank();
  out.push_back(make_verdict("sec_gw.pairing_P_degenerate", rank_a == n + 1 && (rank_a == mu) == manifold,
                             "rank " + std::to_string(rank_a)));
  return out;
}

}  // namespace wproj
