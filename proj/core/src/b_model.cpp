#include "wproj/b_model.hpp"

#include <string>

namespace wproj {

namespace {

constexpr std::size_t kX = 0;

Rational as_rational(std::size_t k) { return Rational(static_cast<long>(k)); }

RationalMatrix h_matrix(std::size_t mu) {
  RationalVector h;
  for (std::size_t k = 0; k < mu; ++k) h.push_back(as_rational(k));
  return RationalMatrix::diagonal(h);
}

std::vector<Puiseux> act(const PuiseuxMatrix& m, const std::vector<Puiseux>& v) {
  std::vector<Puiseux> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

IdentityReport zero_vector(const std::vector<Puiseux>& v, const std::string& condition) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return IdentityReport::fail(condition, i, 0, v[i]);
  return IdentityReport::ok();
}

}  // namespace

PuiseuxMatrix a0_phi(const WeightData& wd) {
  const std::size_t mu = wd.mu;
  PuiseuxMatrix a(mu);
  for (std::size_t i = 1; i < mu; ++i) a(i, i - 1) = Puiseux(as_rational(mu));
  a(0, mu - 1) = Puiseux::x_power(as_rational(mu) / Rational(wd.w_pow_w), 1, 0, kX);
  return a;
}

Connection b_connection(const WeightData& wd, const SpectrumData& sd) {
  const std::size_t mu = wd.mu;
  const PuiseuxMatrix a0 = a0_phi(wd);
  const PuiseuxMatrix a_inf = RationalMatrix::diagonal(sd.alpha).to_puiseux();
  const PuiseuxMatrix h = h_matrix(mu).to_puiseux();
  const Puiseux inv_theta = Puiseux::theta_power(-1);

  Connection conn;
  for (std::size_t k = 0; k < mu; ++k) conn.basis_labels.push_back("w" + std::to_string(k));
  conn.theta_part = inv_theta * a0 + a_inf;
  conn.directions.push_back(
      {"x", kX, DifferentialKind::Logarithmic, Puiseux(Rational(1) / as_rational(mu)) * (h - a_inf - inv_theta * a0)});
  return conn;
}

PuiseuxMatrix b_pairing(const WeightData& wd) {
  const std::size_t mu = wd.mu;
  const std::size_t n = wd.n;
  const int th = static_cast<int>(n);
  const Rational inv_m1 = Rational(1) / Rational(wd.m1());
  PuiseuxMatrix s(mu);
  for (std::size_t k = 0; k <= n; ++k) s(k, n - k) = Puiseux::theta_power(th, inv_m1);
  for (std::size_t k = n + 1; k < mu; ++k)
    s(k, mu + n - k) = Puiseux::x_power(inv_m1 / Rational(wd.w_pow_w), 1, th, kX);
  return s;
}

std::vector<Puiseux> flat_gauge(const SpectrumData& sd) {
  std::vector<Puiseux> g;
  for (const auto& c : sd.c) g.push_back(Puiseux::x_power(1, Rational(-c), 0, kX));
  return g;
}

std::vector<Puiseux> orbifold_gauge(const SpectrumData& sd) {
  std::vector<Puiseux> g;
  for (std::size_t i = 0; i < sd.c.size(); ++i)
    g.push_back(Puiseux::x_power(Rational(1 / sd.s[i]), Rational(-sd.c[i]), 0, kX));
  return g;
}

GaugedBases gauge_to_flat_and_orb(const WeightData& wd, const SpectrumData& sd) {
  const Connection phi = b_connection(wd, sd);
  GaugedBases out;
  out.conn_flat = gauge_diagonal(phi, flat_gauge(sd));
  out.conn_orb = gauge_diagonal(phi, orbifold_gauge(sd));
  out.pairing_orb = gauge_pairing(b_pairing(wd), orbifold_gauge(sd));
  return out;
}

PuiseuxMatrix a0_flat_expected(const WeightData& wd, const SpectrumData& sd) {
  const std::size_t mu = wd.mu;
  const Rational m = as_rational(mu);
  PuiseuxMatrix a(mu);
  for (std::size_t i = 1; i < mu; ++i) a(i, i - 1) = Puiseux::x_power(m, Rational(sd.c[i] - sd.c[i - 1]), 0, kX);
  a(0, mu - 1) = Puiseux::x_power(m / Rational(wd.w_pow_w), Rational(1 - sd.c[mu - 1]), 0, kX);
  return a;
}

PuiseuxMatrix a0_orb_expected(const WeightData& wd, const SpectrumData& sd) {
  const std::size_t mu = wd.mu;
  const Rational m = as_rational(mu);
  PuiseuxMatrix a(mu);
  for (std::size_t i = 1; i < mu; ++i)
    a(i, i - 1) = Puiseux::x_power(m * sd.subdiagonal(i), Rational(sd.c[i] - sd.c[i - 1]), 0, kX);
  a(0, mu - 1) = Puiseux::x_power(m * sd.subdiagonal(mu), Rational(1 - sd.c[mu - 1]), 0, kX);
  return a;
}

PuiseuxMatrix a0_orb_displayed(const WeightData& wd, const SpectrumData& sd) {
  PuiseuxMatrix a = a0_orb_expected(wd, sd);
  a(0, wd.mu - 1) = a(0, wd.mu - 1) * Puiseux(Rational(1) / Rational(wd.w_pow_w));
  return a;
}

PuiseuxMatrix pairing_orb_expected(const WeightData& wd) {
  const std::size_t mu = wd.mu;
  const std::size_t n = wd.n;
  const int th = static_cast<int>(n);
  PuiseuxMatrix s(mu);
  for (std::size_t k = 0; k <= n; ++k) s(k, n - k) = Puiseux::theta_power(th, Rational(1) / Rational(wd.m1()));
  // Positions n+1.. run through the sectors f > 0 in order.
  const auto offsets = sector_offsets(wd);
  for (std::size_t i = 1; i < wd.sectors.size(); ++i)
    for (std::size_t j = 0; j < wd.sectors[i].d; ++j) {
      const std::size_t k = offsets[i] + j;
      s(k, mu + n - k) = Puiseux::theta_power(th, Rational(1) / Rational(wd.sectors[i].m));
    }
  return s;
}

std::vector<HMonomial> h_monomials(const WeightData& wd, const SpectrumData& sd) {
  std::vector<HMonomial> out;
  out.push_back({Rational(1), 0, std::vector<std::int64_t>(wd.n + 1, 0)});
  for (std::size_t k = 1; k < wd.mu; ++k) {
    Rational coeff = 1;
    for (std::size_t i = 1; i <= wd.n; ++i)
      coeff /= rpow(Rational(static_cast<long>(wd.weights[i])), static_cast<long>(sd.a[k][i]));
    out.push_back({coeff, 1, sd.a[k]});
  }
  return out;
}

ProductTerm jacobi_product(const WeightData& wd, std::size_t i, std::size_t j) {
  const std::size_t mu = wd.mu;
  if (i + j < mu) return {Puiseux(1), i + j};
  return {Puiseux::x_power(Rational(1) / Rational(wd.w_pow_w), 1, 0, kX), i + j - mu};
}

std::vector<Puiseux> qde_residual(const WeightData& wd, const SpectrumData& sd, QdePrefactor prefactor) {
  const std::size_t mu = wd.mu;
  // Matrix of x nabla_{d/dx}.
  const PuiseuxMatrix m = Puiseux::theta_power(-1, Rational(-1) / as_rational(mu)) * a0_phi(wd) +
                          RationalMatrix::diagonal(sd.c).to_puiseux();
  std::vector<Puiseux> v(mu);
  v[0] = Puiseux(1);
  for (std::size_t i = 0; i < mu; ++i) {
    std::vector<Puiseux> next = act(m, v);
    for (std::size_t k = 0; k < mu; ++k) next[k] += v[k].log_derivative(kX) - sd.c[i] * v[k];
    v = std::move(next);
  }
  Rational scale(wd.w_pow_w);
  if (prefactor == QdePrefactor::SignAdjusted && mu % 2 == 1) scale = -scale;
  const Puiseux pre = Puiseux::theta_power(static_cast<int>(mu), scale);
  for (auto& e : v) e = pre * e;
  v[0] -= Puiseux::x_power(1, 1, 0, kX);
  return v;
}

BModelPackage build_b_model(const WeightData& wd, const SpectrumData& sd) {
  BModelPackage pkg;
  pkg.A0_phi = a0_phi(wd);
  pkg.A_inf = RationalMatrix::diagonal(sd.alpha);
  pkg.H = h_matrix(wd.mu);
  pkg.R_phi = Rational(1) / as_rational(wd.mu) * (pkg.H - pkg.A_inf);
  pkg.S_B = b_pairing(wd);
  pkg.conn_phi = b_connection(wd, sd);
  auto gauged = gauge_to_flat_and_orb(wd, sd);
  pkg.conn_flat = std::move(gauged.conn_flat);
  pkg.conn_orb = std::move(gauged.conn_orb);
  pkg.pairing_orb = std::move(gauged.pairing_orb);
  pkg.product_h = h_monomials(wd, sd);
  return pkg;
}

VerdictList verify_b_model(const WeightData& wd, const SpectrumData& sd, const BModelPackage& pkg) {
  VerdictList out;
  const std::size_t mu = wd.mu;
  const int n = static_cast<int>(wd.n);
  const Puiseux inv_theta = Puiseux::theta_power(-1);
  const Puiseux inv_mu_theta = Puiseux::theta_power(-1, Rational(-1) / as_rational(mu));

  out.push_back(make_verdict("thm_basevarphi.r_phi_diagonal", pkg.R_phi == RationalMatrix::diagonal(sd.c)));
  out.push_back(make_verdict("thm_basevarphi.flatness", verify_flatness(pkg.conn_phi)));
  out.push_back(make_verdict("eq_paring.pairing_flatness", verify_pairing_flatness(pkg.conn_phi, pkg.S_B, n)));
  out.push_back(make_verdict("lemma_symetrie.a0_self_adjoint",
                             verify_adjoint(pkg.A0_phi, pkg.S_B, AdjointMode::SelfAdjoint)));
  out.push_back(make_verdict("lemma_symetrie.a_inf_sum",
                             verify_adjoint(pkg.A_inf.to_puiseux(), pkg.S_B, AdjointMode::SumToScalar, Rational(n))));

  {
    const PuiseuxMatrix a0 = a0_flat_expected(wd, sd);
    IdentityReport r = compare_matrices(pkg.conn_flat.theta_part, inv_theta * a0 + pkg.A_inf.to_puiseux(), "flat theta part");
    if (r) r = compare_matrices(pkg.conn_flat.direction("x").matrix, inv_mu_theta * a0, "flat x part");
    out.push_back(make_verdict("sec_flat.flat_matrices", r));
    out.push_back(make_verdict("sec_flat.flat_flatness", verify_flatness(pkg.conn_flat)));
  }
  {
    const PuiseuxMatrix a0 = a0_orb_expected(wd, sd);
    IdentityReport r = compare_matrices(pkg.conn_orb.theta_part, inv_theta * a0 + pkg.A_inf.to_puiseux(), "orb theta part");
    if (r) r = compare_matrices(pkg.conn_orb.direction("x").matrix, inv_mu_theta * a0, "orb x part");
    out.push_back(make_verdict("sec_flat.orb_matrices", r));
    const PuiseuxMatrix shown = a0_orb_displayed(wd, sd);
    IdentityReport d = compare_matrices(pkg.conn_orb.theta_part, inv_theta * shown + pkg.A_inf.to_puiseux(), "orb theta part");
    if (d) d = compare_matrices(pkg.conn_orb.direction("x").matrix, inv_mu_theta * shown, "orb x part");
    out.push_back(make_verdict("sec_flat.orb_matrices_as_displayed", d));
    out.push_back(make_verdict("sec_flat.orb_flatness", verify_flatness(pkg.conn_orb)));
  }
  out.push_back(make_verdict("cor_orbipairing.pairing",
                             compare_matrices(pkg.pairing_orb, pairing_orb_expected(wd), "orbifold pairing")));
  out.push_back(make_verdict("cor_orbipairing.pairing_flatness",
                             verify_pairing_flatness(pkg.conn_orb, pkg.pairing_orb, n)));

  {
    bool ok = true;
    std::string detail = "ok";
    auto times = [&](const ProductTerm& a, std::size_t k) {
      ProductTerm t = jacobi_product(wd, a.index, k);
      return ProductTerm{a.coefficient * t.coefficient, t.index};
    };
    for (std::size_t i = 0; i < mu && ok; ++i)
      for (std::size_t j = 0; j < mu && ok; ++j) {
        if (!(jacobi_product(wd, i, j) == jacobi_product(wd, j, i))) {
          ok = false;
          detail = "not commutative at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
        if (i == 0 && !(jacobi_product(wd, 0, j) == ProductTerm{Puiseux(1), j})) {
          ok = false;
          detail = "omega_0 is not a unit at " + std::to_string(j);
        }
        for (std::size_t k = 0; k < mu && ok; ++k) {
          const ProductTerm left = times(jacobi_product(wd, i, j), k);
          const ProductTerm jk = jacobi_product(wd, j, k);
          ProductTerm right = jacobi_product(wd, i, jk.index);
          right.coefficient = right.coefficient * jk.coefficient;
          if (!(left == right)) {
            ok = false;
            detail = "not associative at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
          }
        }
      }
    out.push_back(make_verdict("prop_prod.algebra_axioms", ok, detail));
  }
  {
    bool ok = true;
    std::string detail = "ok";
    ProductTerm power{Puiseux(1), 0};
    for (std::size_t i = 0; i < mu && ok; ++i) {
      if (!(power == ProductTerm{Puiseux(1), i})) {
        ok = false;
        detail = "omega_1^" + std::to_string(i) + " != omega_" + std::to_string(i);
      }
      ProductTerm t = jacobi_product(wd, power.index, 1);
      power = {power.coefficient * t.coefficient, t.index};
    }
    const ProductTerm top{Puiseux::x_power(Rational(1) / Rational(wd.w_pow_w), 1, 0, kX), 0};
    if (ok && !(power == top)) {
      ok = false;
      detail = "omega_1^mu != x/w^w";
    }
    out.push_back(make_verdict("prop_prod.iterated_power", ok, detail));
  }
  out.push_back(make_verdict("remark_start3.qde_as_stated",
                             zero_vector(qde_residual(wd, sd, QdePrefactor::AsStated), "QDE residual")));
  out.push_back(make_verdict("remark_start3.qde_sign_adjusted",
                             zero_vector(qde_residual(wd, sd, QdePrefactor::SignAdjusted), "QDE residual")));
  return out;
}

}  // namespace wproj
