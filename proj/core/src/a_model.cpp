#include "wproj/a_model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wproj {

namespace {

constexpr std::size_t kQ = 0;

std::string class_label(const OrbifoldClass& b) {
  std::string s = b.f == 0 ? "1" : "1_{" + b.f.get_str() + "}";
  if (b.power == 1) s += "P";
  if (b.power > 1) s += "P^" + std::to_string(b.power);
  return s;
}

}  // namespace

std::vector<OrbifoldClass> orbifold_basis(const WeightData& wd, const SpectrumData& sd) {
  std::vector<OrbifoldClass> out;
  out.reserve(wd.mu);
  for (const auto& sec : wd.sectors)
    for (std::size_t j = 0; j < sec.d; ++j) {
      Rational age = 0;
      for (std::int64_t w : wd.weights) age += fractional_part(Rational(-w * sec.f));
      out.push_back({sec.f, j, Rational(2 * static_cast<long>(j)) + 2 * age});
    }
  (void)sd;
  return out;
}

PuiseuxMatrix quantum_matrix_C(const WeightData& wd, const SpectrumData& sd) {
  const std::size_t mu = wd.mu;
  PuiseuxMatrix c(mu);
  for (std::size_t i = 1; i < mu; ++i)
    c(i, i - 1) = Puiseux::x_power(sd.subdiagonal(i), Rational(sd.c[i] - sd.c[i - 1]), 0, kQ);
  c(0, mu - 1) = Puiseux::x_power(sd.subdiagonal(mu), Rational(1 - sd.c[mu - 1]), 0, kQ);
  return c;
}

PuiseuxMatrix quantum_matrix_Cphi(const WeightData& wd, const SpectrumData& sd) {
  const std::size_t mu = wd.mu;
  PuiseuxMatrix c(mu);
  for (std::size_t i = 1; i < mu; ++i) c(i, i - 1) = Puiseux(1);
  c(0, mu - 1) = Puiseux::x_power(Rational(1) / Rational(wd.w_pow_w), 1, 0, kQ);
  (void)sd;
  return c;
}

std::vector<Puiseux> global_basis_gauge(const SpectrumData& sd) {
  std::vector<Puiseux> d;
  for (std::size_t i = 0; i < sd.c.size(); ++i) d.push_back(Puiseux::x_power(sd.s[i], sd.c[i], 0, kQ));
  return d;
}

RationalMatrix poincare_pairing(const WeightData& wd) {
  RationalMatrix g(wd.mu);
  const auto offsets = sector_offsets(wd);
  for (std::size_t i = 0; i < wd.sectors.size(); ++i)
    for (std::size_t j = 0; j < wd.sectors.size(); ++j) {
      const auto& si = wd.sectors[i];
      const auto& sj = wd.sectors[j];
      if (!is_integer(Rational(si.f + sj.f))) continue;
      for (std::size_t k = 0; k < si.d; ++k)
        for (std::size_t l = 0; l < sj.d; ++l)
          if (k + l + 1 == si.d) g(offsets[i] + k, offsets[j] + l) = Rational(1) / Rational(si.m);
    }
  return g;
}

PuiseuxMatrix pairing_P_basis(const WeightData& wd, const SpectrumData& sd) {
  const std::size_t mu = wd.mu;
  const std::size_t n = wd.n;
  const int th = static_cast<int>(n);
  const Rational inv_m1 = Rational(1) / Rational(wd.m1());
  PuiseuxMatrix g(mu);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) {
      if (i + j == n) g(i, j) = Puiseux::theta_power(th, inv_m1);
      else if (i + j == n + mu)
        g(i, j) = Puiseux::x_power(inv_m1 / Rational(wd.w_pow_w), 1, th, kQ);
    }
  (void)sd;
  return g;
}

AConnections a_connections(const WeightData& wd, const SpectrumData& sd) {
  const std::size_t mu = wd.mu;
  const Puiseux inv_z = Puiseux::theta_power(-1);
  const Puiseux mu_over_z = Puiseux::theta_power(-1, Rational(static_cast<long>(mu)));
  const auto basis = orbifold_basis(wd, sd);

  RationalVector half_degrees;
  for (const auto& b : basis) half_degrees.push_back(b.degree / 2);
  const PuiseuxMatrix a_inf = RationalMatrix::diagonal(half_degrees).to_puiseux();
  const PuiseuxMatrix r_phi = RationalMatrix::diagonal(sd.c).to_puiseux();
  const PuiseuxMatrix c = quantum_matrix_C(wd, sd);
  const PuiseuxMatrix c_phi = quantum_matrix_Cphi(wd, sd);

  AConnections out;
  for (const auto& b : basis) out.conn_1f.basis_labels.push_back(class_label(b));
  out.conn_1f.theta_part = mu_over_z * c + a_inf;
  out.conn_1f.directions.push_back({"q", kQ, DifferentialKind::Logarithmic, -(inv_z * c)});

  for (std::size_t i = 0; i < mu; ++i) out.conn_P.basis_labels.push_back("(P.)^" + std::to_string(i));
  out.conn_P.theta_part = mu_over_z * c_phi + a_inf;
  out.conn_P.directions.push_back({"q", kQ, DifferentialKind::Logarithmic, r_phi - inv_z * c_phi});
  return out;
}

AModelPackage build_a_model(const WeightData& wd, const SpectrumData& sd) {
  AModelPackage pkg;
  pkg.basis = orbifold_basis(wd, sd);
  pkg.C_q = quantum_matrix_C(wd, sd);
  pkg.C_phi = quantum_matrix_Cphi(wd, sd);
  RationalVector half_degrees;
  for (const auto& b : pkg.basis) half_degrees.push_back(b.degree / 2);
  pkg.A_inf = RationalMatrix::diagonal(half_degrees);
  pkg.R_phi = RationalMatrix::diagonal(sd.c);
  pkg.pairing_1f = poincare_pairing(wd);
  pkg.pairing_P = pairing_P_basis(wd, sd);
  auto conns = a_connections(wd, sd);
  pkg.conn_1f = std::move(conns.conn_1f);
  pkg.conn_P = std::move(conns.conn_P);
  return pkg;
}

IdentityReport gauge_consistency_check(const WeightData& wd, const SpectrumData& sd) {
  const auto gauge = global_basis_gauge(sd);
  const std::size_t mu = wd.mu;
  const PuiseuxMatrix c = quantum_matrix_C(wd, sd);
  PuiseuxMatrix conjugated(mu);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j)
      if (!c(i, j).is_zero()) conjugated(i, j) = gauge[i].inverse() * c(i, j) * gauge[j];
  if (auto r = compare_matrices(conjugated, quantum_matrix_Cphi(wd, sd), "D^-1 C D = C^phi"); !r) return r;
  const auto conns = a_connections(wd, sd);
  return compare_connections(gauge_diagonal(conns.conn_1f, gauge), conns.conn_P);
}

PicardReport picard_action_check(const WeightData& wd, const SpectrumData& sd, std::int64_t d) {
  PicardReport rep;
  const std::size_t mu = wd.mu;
  std::ostringstream why;
  for (std::size_t i = 0; i < mu; ++i) {
    // s(O(d).q) = O(d).s(q) for s = q^{c_i} s_i 1_{c_i} P^{r(i)}
    const Phase total = picard_phase_on_monomial(d, sd.c[i]) - picard_phase_on_class(d, sd.c[i]);
    if (!total.is_trivial()) {
      rep.global_basis_equivariant = false;
      why << "(P.)^" << i << " not equivariant; ";
    }
  }
  const PuiseuxMatrix c = quantum_matrix_C(wd, sd);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) {
      const Puiseux& e = c(i, j);
      if (e.is_zero()) continue;
      for (const auto& [exp, coeff] : e.terms()) {
        const Phase total =
            picard_phase_on_class(d, sd.c[j]) + picard_phase_on_monomial(d, exp.x_exp(kQ)) - picard_phase_on_class(d, sd.c[i]);
        if (!total.is_trivial()) {
          rep.product_invariant = false;
          why << "C(" << i << "," << j << ") carries phase " << total.value().get_str() << "; ";
        }
      }
    }
  if (!rep.passed()) rep.detail = why.str();
  return rep;
}

VerdictList verify_a_model(const WeightData& wd, const SpectrumData& sd, const AModelPackage& pkg) {
  VerdictList out;
  const std::size_t mu = wd.mu;
  const int n = static_cast<int>(wd.n);

  {
    bool ok = true;
    std::string detail = "ok";
    for (std::size_t k = 0; k < mu && ok; ++k) {
      const auto& b = pkg.basis[k];
      if (b.f != sd.c[k] || b.power != sd.r[k]) {
        ok = false;
        detail = "basis order differs from the c-sequence at " + std::to_string(k);
      } else if (b.degree != 2 * sd.alpha[k]) {
        ok = false;
        detail = "deg^orb != 2 alpha at " + std::to_string(k);
      }
    }
    out.push_back(make_verdict("sec_toric.orbifold_degree", ok, detail));
  }
  out.push_back(make_verdict("eq17.gauge_consistency", gauge_consistency_check(wd, sd)));
  {
    const bool sym = pkg.pairing_1f == pkg.pairing_1f.transpose();
    const bool inv = pkg.pairing_1f.determinant() != 0;
    out.push_back(make_verdict("eq18.pairing_symmetric_invertible", sym && inv));
  }
  {
    const PuiseuxMatrix lifted = Puiseux::theta_power(n) * pkg.pairing_1f.to_puiseux();
    out.push_back(make_verdict("prop_pairingglobal.change_of_basis",
                               compare_matrices(gauge_pairing(lifted, global_basis_gauge(sd)), pkg.pairing_P,
                                                "D^T <,> D theta^n = S^A")));
  }
  out.push_back(make_verdict("prop_nabla.flatness_1f", verify_flatness(pkg.conn_1f)));
  out.push_back(make_verdict("prop_nabla.flatness_P", verify_flatness(pkg.conn_P)));
  {
    const PuiseuxMatrix lifted = Puiseux::theta_power(n) * pkg.pairing_1f.to_puiseux();
    out.push_back(make_verdict("prop_nabla.pairing_flatness_1f", verify_pairing_flatness(pkg.conn_1f, lifted, n)));
    out.push_back(make_verdict("prop_nabla.pairing_flatness_P", verify_pairing_flatness(pkg.conn_P, pkg.pairing_P, n)));
  }
  {
    const PuiseuxMatrix g = pkg.pairing_1f.to_puiseux();
    IdentityReport r = verify_adjoint(pkg.C_q, g, AdjointMode::SelfAdjoint);
    if (r) r = verify_adjoint(pkg.A_inf.to_puiseux(), g, AdjointMode::SumToScalar, Rational(n));
    out.push_back(make_verdict("prop_nabla.adjointness", r));
  }
  {
    PuiseuxMatrix power = PuiseuxMatrix::identity(mu);
    for (std::size_t k = 0; k < mu; ++k) power = power * pkg.C_phi;
    const PuiseuxMatrix expected =
        Puiseux::x_power(Rational(1) / Rational(wd.w_pow_w), 1, 0, kQ) * PuiseuxMatrix::identity(mu);
    out.push_back(make_verdict("prop_prod.cphi_power", compare_matrices(power, expected, "C^phi^mu = q/w^w")));
  }
  {
    bool ok = true;
    std::string detail = "ok";
    for (std::int64_t d = -1; d <= wd.max_weight() && ok; ++d) {
      const auto rep = picard_action_check(wd, sd, d);
      if (!rep.passed()) {
        ok = false;
        detail = "d=" + std::to_string(d) + ": " + rep.detail;
      }
    }
    out.push_back(make_verdict("prop_action.equivariance", ok, detail));
  }
  return out;
}

}  // namespace wproj
