#include "wproj/mirror.hpp"

#include <string>

namespace wproj {

namespace {

Connection rescale(const Connection& conn, const Rational& scale) {
  return gauge_diagonal(conn, std::vector<Puiseux>(conn.rank(), Puiseux(scale)));
}

PuiseuxMatrix rescale(const PuiseuxMatrix& pairing, const Rational& scale) {
  return gauge_pairing(pairing, std::vector<Puiseux>(pairing.size(), Puiseux(scale)));
}

}  // namespace

VerdictList verify_mirror(const AModelPackage& a, const BModelPackage& b, const Rational& scale) {
  VerdictList out;
  const Connection ca = scale == 1 ? a.conn_P : rescale(a.conn_P, scale);
  const Connection cb = scale == 1 ? b.conn_phi : rescale(b.conn_phi, scale);
  const PuiseuxMatrix pa = scale == 1 ? a.pairing_P : rescale(a.pairing_P, scale);
  const PuiseuxMatrix pb = scale == 1 ? b.S_B : rescale(b.S_B, scale);

  out.push_back(make_verdict("thm_quantum.connection_z",
                             compare_matrices(ca.theta_part, cb.theta_part, "Omega_z = Omega_theta")));
  out.push_back(make_verdict("thm_quantum.connection_q",
                             compare_matrices(ca.direction("q").matrix, cb.direction("x").matrix, "Omega_q = Omega_x")));
  out.push_back(make_verdict("thm_quantum.pairing", compare_matrices(pa, pb, "S^A = S^B")));
  out.push_back(make_verdict("thm_quantum.a_infinity",
                             compare_matrices(a.A_inf.to_puiseux(), b.A_inf.to_puiseux(), "deg/2 = alpha")));
  {
    const std::size_t mu = a.C_phi.size();
    const PuiseuxMatrix scaled = Puiseux(Rational(1, static_cast<unsigned long>(mu))) * b.A0_phi;
    out.push_back(make_verdict("thm_quantum.a0_over_mu", compare_matrices(scaled, a.C_phi, "A0/mu = C^phi")));
  }
  return out;
}

VerdictList verify_mirror(const WeightData& wd, const SpectrumData& sd) {
  return verify_mirror(build_a_model(wd, sd), build_b_model(wd, sd));
}

IdentityReport verify_product_mirror(const WeightData& wd, const AModelPackage& a) {
  const std::size_t mu = wd.mu;
  PuiseuxMatrix power = PuiseuxMatrix::identity(mu);
  for (std::size_t i = 0; i < mu; ++i) {
    for (std::size_t j = 0; j < mu; ++j) {
      const ProductTerm expected = jacobi_product(wd, i, j);
      for (std::size_t k = 0; k < mu; ++k) {
        const Puiseux want = k == expected.index ? expected.coefficient : Puiseux();
        if (!(power(k, j) == want))
          return IdentityReport::fail("P^" + std::to_string(i) + " . P^" + std::to_string(j) + " coordinate", k, j,
                                      power(k, j) - want);
      }
    }
    power = a.C_phi * power;
  }
  return IdentityReport::ok();
}

}  // namespace wproj
