#include "doctest.h"
#include "wproj/mirror.hpp"
#include "wproj/report.hpp"

using namespace wproj;

namespace {

struct Built {
  WeightData wd;
  SpectrumData sd;
};

Built build(std::vector<std::int64_t> w) {
  WeightData wd = build_weight_data(w);
  SpectrumData sd = compute_spectrum(wd);
  return {std::move(wd), std::move(sd)};
}

bool verdict(const VerdictList& list, const std::string& name) {
  for (const auto& v : list)
    if (v.name == name) return v.passed;
  FAIL("missing verdict " << name);
  return false;
}

}  // namespace

TEST_CASE("mirror identification for every tuple with mu <= 12") {
  for (const auto& w : enumerate_weights(12)) {
    const auto b = build(w);
    CAPTURE(format_weights(w));
    const AModelPackage a = build_a_model(b.wd, b.sd);
    for (const auto& v : verify_mirror(a, build_b_model(b.wd, b.sd))) {
      CAPTURE(v.name);
      CAPTURE(v.detail);
      CHECK(v.passed);
    }
    CHECK(verify_product_mirror(b.wd, a).passed());
  }
}

TEST_CASE("a corrupted corner on the A-side is caught") {
  const auto b = build({1, 2, 2});
  AModelPackage a = build_a_model(b.wd, b.sd);
  const BModelPackage bm = build_b_model(b.wd, b.sd);
  a.conn_P.directions[0].matrix(0, 4) = a.conn_P.directions[0].matrix(0, 4) * Puiseux(make_rational(1, 2));
  const VerdictList out = verify_mirror(a, bm);
  CHECK_FALSE(verdict(out, "thm_quantum.connection_q"));
  CHECK(verdict(out, "thm_quantum.connection_z"));
  CHECK(verdict(out, "thm_quantum.pairing"));
}

TEST_CASE("a corrupted pairing on the B-side is caught") {
  const auto b = build({1, 3});
  const AModelPackage a = build_a_model(b.wd, b.sd);
  BModelPackage bm = build_b_model(b.wd, b.sd);
  bm.S_B(2, 3) = bm.S_B(2, 3) * Puiseux(3);
  CHECK_FALSE(verdict(verify_mirror(a, bm), "thm_quantum.pairing"));
}

TEST_CASE("constant rescaling on both sides keeps the identification") {
  for (const auto& w : std::vector<std::vector<std::int64_t>>{{1, 1}, {1, 2, 2}, {1, 2, 3}, {1, 1, 3}}) {
    const auto b = build(w);
    const AModelPackage a = build_a_model(b.wd, b.sd);
    const BModelPackage bm = build_b_model(b.wd, b.sd);
    for (const auto& v : verify_mirror(a, bm, make_rational(3))) {
      CAPTURE(v.name);
      CHECK(v.passed);
    }
    for (const auto& v : verify_mirror(a, bm, make_rational(-2, 7))) CHECK(v.passed);
  }
}

TEST_CASE("product mirror detects a wrong Jacobi corner") {
  const auto b = build({1, 2, 3});
  AModelPackage a = build_a_model(b.wd, b.sd);
  a.C_phi(0, 5) = a.C_phi(0, 5) * Puiseux(2);
  CHECK_FALSE(verify_product_mirror(b.wd, a).passed());
}
