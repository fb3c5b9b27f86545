#include "doctest.h"
#include "wproj/a_model.hpp"
#include "wproj/report.hpp"

using namespace wproj;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }
Puiseux qp(const Rational& c, const Rational& r, int th = 0) { return Puiseux::x_power(c, r, th); }

struct Built {
  WeightData wd;
  SpectrumData sd;
};

Built build(std::vector<std::int64_t> w) {
  WeightData wd = build_weight_data(w);
  SpectrumData sd = compute_spectrum(wd);
  return {std::move(wd), std::move(sd)};
}

}  // namespace

TEST_CASE("C(q) for P(1,2,2) matches the worked example") {
  const auto b = build({1, 2, 2});
  PuiseuxMatrix expected(5);
  expected(0, 4) = qp(q(1, 4), q(1, 2));
  expected(1, 0) = Puiseux(1);
  expected(2, 1) = Puiseux(1);
  expected(3, 2) = qp(q(1, 4), q(1, 2));
  expected(4, 3) = Puiseux(1);
  CHECK(quantum_matrix_C(b.wd, b.sd) == expected);

  PuiseuxMatrix at_zero(5);
  at_zero(1, 0) = Puiseux(1);
  at_zero(2, 1) = Puiseux(1);
  at_zero(4, 3) = Puiseux(1);
  CHECK(quantum_matrix_C(b.wd, b.sd).at_zero(0) == at_zero);
}

TEST_CASE("C(q) and C^phi for small cases") {
  const auto b = build({1, 1, 1});
  PuiseuxMatrix expected(3);
  expected(1, 0) = Puiseux(1);
  expected(2, 1) = Puiseux(1);
  expected(0, 2) = qp(1, 1);
  CHECK(quantum_matrix_C(b.wd, b.sd) == expected);
  CHECK(quantum_matrix_Cphi(b.wd, b.sd) == expected);

  const auto w = build({1, 2, 2});
  CHECK(quantum_matrix_Cphi(w.wd, w.sd)(0, 4) == qp(q(1, 16), 1));
  const auto t = build({1, 3});
  CHECK(quantum_matrix_Cphi(t.wd, t.sd)(0, 3) == qp(q(1, 27), 1));
}

TEST_CASE("gauge consistency") {
  for (const auto& w : std::vector<std::vector<std::int64_t>>{{1, 2, 2}, {1, 1, 1}, {1, 1, 2}, {1, 2, 3, 5}}) {
    const auto b = build(w);
    CHECK(gauge_consistency_check(b.wd, b.sd).passed());
  }
  const auto m = build({1, 1, 1, 1});
  for (const auto& g : global_basis_gauge(m.sd)) CHECK(g == Puiseux(1));
}

TEST_CASE("orbifold Poincare pairing") {
  const auto b = build({1, 2, 2});
  const RationalMatrix g = poincare_pairing(b.wd);
  CHECK(g(0, 2) == q(1, 4));
  CHECK(g(3, 4) == q(1, 4));
  CHECK(g(1, 3) == 0);
  CHECK(g(1, 1) == q(1, 4));
  CHECK(g.determinant() != 0);
  const auto one = build({1, 1});
  const RationalMatrix h = poincare_pairing(one.wd);
  CHECK(h(0, 1) == 1);
  CHECK(h(0, 0) == 0);

  // Sectors f and 1-f pair, and only them.
  const auto t = build({1, 1, 3});
  const RationalMatrix k = poincare_pairing(t.wd);
  CHECK(k(3, 4) == q(1, 3));
  CHECK(k(3, 3) == 0);
}

TEST_CASE("pairing in the global basis") {
  const auto b = build({1, 2, 2});
  const PuiseuxMatrix s = pairing_P_basis(b.wd, b.sd);
  CHECK(s(0, 2) == Puiseux::theta_power(2, q(1, 4)));
  CHECK(s(3, 4) == qp(q(1, 64), 1, 2));
  CHECK(s(1, 3).is_zero());
  const auto m = build({1, 1, 1});
  const PuiseuxMatrix t = pairing_P_basis(m.wd, m.sd);
  CHECK(t(0, 2) == Puiseux::theta_power(2));
  CHECK(t(1, 1) == Puiseux::theta_power(2));
}

TEST_CASE("orbifold degrees are twice the spectrum") {
  const auto b = build({1, 2, 2});
  const auto basis = orbifold_basis(b.wd, b.sd);
  const std::vector<Rational> degrees{0, 2, 4, 1, 3};
  for (std::size_t k = 0; k < 5; ++k) CHECK(basis[k].degree == degrees[k]);
  CHECK(basis[4].f == q(1, 2));
  CHECK(basis[4].power == 1);
}

TEST_CASE("a corrupted corner breaks pairing flatness") {
  const auto b = build({1, 2, 2});
  AModelPackage pkg = build_a_model(b.wd, b.sd);
  CHECK(verify_pairing_flatness(pkg.conn_P, pkg.pairing_P, 2).passed());
  Connection bad = pkg.conn_P;
  const Puiseux corner = bad.directions[0].matrix(0, 4);
  bad.directions[0].matrix(0, 4) = corner * Puiseux(2);
  bad.theta_part(0, 4) = bad.theta_part(0, 4) * Puiseux(2);
  CHECK_FALSE(verify_pairing_flatness(bad, pkg.pairing_P, 2).passed());
}

TEST_CASE("Picard action phases") {
  CHECK(picard_phase_on_monomial(1, q(1, 2)).value() == q(1, 2));
  CHECK(picard_phase_on_class(1, q(1, 2)).value() == q(1, 2));
  CHECK(picard_phase_on_class(2, q(1, 3)).value() == q(1, 3));
  const auto b = build({1, 2, 2});
  const auto m = build({1, 1, 1});
  for (std::int64_t d = -3; d <= 3; ++d) {
    CHECK(picard_action_check(b.wd, b.sd, d).passed());
    CHECK(picard_phase_on_class(d, 0).is_trivial());
    CHECK(picard_action_check(m.wd, m.sd, d).passed());
  }
}

TEST_CASE("A-model verdicts over every tuple with mu <= 12") {
  for (const auto& w : enumerate_weights(12)) {
    const auto b = build(w);
    CAPTURE(format_weights(w));
    for (const auto& v : verify_a_model(b.wd, b.sd, build_a_model(b.wd, b.sd))) {
      CAPTURE(v.name);
      CAPTURE(v.detail);
      CHECK(v.passed);
    }
  }
}
