#include <map>
#include <utility>

#include "doctest.h"
#include "wproj/limits.hpp"
#include "wproj/report.hpp"

using namespace wproj;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

struct Built {
  WeightData wd;
  SpectrumData sd;
};

Built build(std::vector<std::int64_t> w) {
  WeightData wd = build_weight_data(w);
  SpectrumData sd = compute_spectrum(wd);
  return {std::move(wd), std::move(sd)};
}

using Table = std::map<std::pair<std::size_t, std::size_t>, std::pair<Rational, std::size_t>>;

// Checks a full product table (upper triangle given; missing means 0).
void check_table(const FrobeniusAlgebraData& alg, const Table& table) {
  const std::size_t mu = alg.mult.size();
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = i; j < mu; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      RationalVector want(mu);
      if (auto it = table.find({i, j}); it != table.end()) want[it->second.second] = it->second.first;
      CHECK(alg.mult[i].column(j) == want);
      CHECK(alg.mult[j].column(i) == want);
    }
}

}  // namespace

TEST_CASE("Jordan blocks of B for P(1,2,2)") {
  const auto b = build({1, 2, 2});
  const RationalMatrix B = nilpotent_b(b.sd);
  CHECK(jordan_blocks(b.sd) == std::vector<std::size_t>{3, 2});
  CHECK(jordan_blocks_from_ranks(B) == std::vector<std::size_t>{3, 2});
  CHECK(B(1, 0) == -1);
  CHECK(B(3, 2) == 0);
  CHECK(B(4, 3) == -1);
  CHECK(jordan_blocks_from_ranks(RationalMatrix::identity(3)).empty());
  const auto t = build({1, 2, 3});
  CHECK(jordan_blocks_from_ranks(nilpotent_b(t.sd)) == std::vector<std::size_t>{3, 1, 1, 1});
}

TEST_CASE("limit pairing") {
  const auto b = build({1, 2, 2});
  const PuiseuxMatrix s = limit_pairing(b.wd);
  CHECK(s(0, 2) == Puiseux::theta_power(2, q(1, 4)));
  CHECK(s(1, 1) == Puiseux::theta_power(2, q(1, 4)));
  CHECK(s(3, 4) == Puiseux::theta_power(2, q(1, 64)));
  CHECK(s(0, 0).is_zero());
}

TEST_CASE("cup product on the limit for P(1,2,2)") {
  const auto b = build({1, 2, 2});
  Table t;
  for (std::size_t j = 0; j < 5; ++j) t[{0, j}] = {1, j};
  t[{1, 1}] = {1, 2};
  t[{1, 3}] = {1, 4};
  t[{3, 3}] = {q(1, 16), 1};
  t[{3, 4}] = {q(1, 16), 2};
  check_table(limit_cup(b.wd, b.sd), t);
}

TEST_CASE("orbifold cup product for P(1,2,2)") {
  // Basis 1, P, P^2, 1_{1/2}, 1_{1/2}P.
  const auto b = build({1, 2, 2});
  Table t;
  for (std::size_t j = 0; j < 5; ++j) t[{0, j}] = {1, j};
  t[{1, 1}] = {1, 2};
  t[{1, 3}] = {1, 4};
  t[{3, 3}] = {1, 1};
  t[{3, 4}] = {1, 2};
  const FrobeniusAlgebraData orb = orbifold_cup(b.wd, b.sd);
  check_table(orb, t);
  CHECK(check_frobenius_axioms(orb).passed());
}

TEST_CASE("Frobenius axiom checker rejects broken algebras") {
  const auto b = build({1, 2, 2});
  FrobeniusAlgebraData alg = limit_cup(b.wd, b.sd);
  CHECK(check_frobenius_axioms(alg).passed());
  FrobeniusAlgebraData bad = alg;
  bad.mult[3](1, 3) = q(1, 8);
  CHECK_FALSE(check_frobenius_axioms(bad).passed());
  bad = alg;
  bad.pairing(0, 2) = 0;
  CHECK_FALSE(check_frobenius_axioms(bad).passed());
}

TEST_CASE("pre-primitivity") {
  const auto b = build({1, 2, 2});
  const LimitPackage lim = build_limits(b.wd, b.sd);
  for (std::size_t k = 0; k < 5; ++k) CHECK_FALSE(preprimitive_test(lim.A0_bar, unit_vector(5, k)));
  for (const auto& v : random_rational_vectors(5, 32, 7)) CHECK_FALSE(preprimitive_test(lim.A0_bar, v));

  const auto m = build({1, 1, 1});
  const LimitPackage man = build_limits(m.wd, m.sd);
  CHECK(preprimitive_test(man.A0_bar, unit_vector(3, 0)));
  CHECK_FALSE(preprimitive_test(man.A0_bar, unit_vector(3, 2)));
}

TEST_CASE("random vectors are deterministic") {
  CHECK(random_rational_vectors(4, 3, 11) == random_rational_vectors(4, 3, 11));
  CHECK(random_rational_vectors(4, 3, 11) != random_rational_vectors(4, 3, 12));
}

TEST_CASE("limit verdicts over every tuple with mu <= 12") {
  for (const auto& w : enumerate_weights(12)) {
    const auto b = build(w);
    CAPTURE(format_weights(w));
    const BModelPackage bm = build_b_model(b.wd, b.sd);
    for (const auto& v : verify_limits(b.wd, b.sd, build_limits(b.wd, b.sd), bm)) {
      CAPTURE(v.name);
      CAPTURE(v.detail);
      CHECK(v.passed);
    }
  }
}
