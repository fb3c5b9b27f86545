#pragma once

// Small quantum D-module of P(w): the quantum multiplication by P in the
// orbifold basis 1_f P^j and in the global basis (P.)^i, orbifold degrees,
// both pairings, both connections and the Picard-group action.
//
// The parameter q is variable 0 and z is identified with theta throughout.

#include <cstdint>
#include <string>
#include <vector>

#include "wproj/check.hpp"
#include "wproj/combinatorics.hpp"
#include "wproj/connection.hpp"
#include "wproj/linear_algebra.hpp"
#include "wproj/phase.hpp"
#include "wproj/puiseux.hpp"

namespace wproj {

/// Element 1_f P^power at position k of the c-sequence.
struct OrbifoldClass {
  Rational f;
  std::size_t power = 0;
  Rational degree;  // deg^orb, from the fractional-part formula
};

struct AModelPackage {
  std::vector<OrbifoldClass> basis;
  PuiseuxMatrix C_q;
  PuiseuxMatrix C_phi;
  RationalMatrix A_inf;
  RationalMatrix R_phi;
  RationalMatrix pairing_1f;  // orbifold Poincare pairing
  PuiseuxMatrix pairing_P;    // theta^n-valued pairing in the (P.)^i basis
  Connection conn_1f;
  Connection conn_P;
};

std::vector<OrbifoldClass> orbifold_basis(const WeightData& wd, const SpectrumData& sd);

PuiseuxMatrix quantum_matrix_C(const WeightData& wd, const SpectrumData& sd);
PuiseuxMatrix quantum_matrix_Cphi(const WeightData& wd, const SpectrumData& sd);

/// diag(q^{c_i} s_i): the change of basis (P.)^i = q^{c_i} s_i 1_{c_i} P^{r(i)}.
std::vector<Puiseux> global_basis_gauge(const SpectrumData& sd);

RationalMatrix poincare_pairing(const WeightData& wd);
PuiseuxMatrix pairing_P_basis(const WeightData& wd, const SpectrumData& sd);

struct AConnections {
  Connection conn_1f;
  Connection conn_P;
};
AConnections a_connections(const WeightData& wd, const SpectrumData& sd);

AModelPackage build_a_model(const WeightData& wd, const SpectrumData& sd);

/// D^{-1} C D == C^phi and the full gauge law conn_P == gauge(conn_1f, D).
IdentityReport gauge_consistency_check(const WeightData& wd, const SpectrumData& sd);

/// O(d) acting on 1_f P^k.
inline Phase picard_phase_on_class(std::int64_t d, const Rational& f) { return Phase(Rational(-d * f)); }
/// O(d) acting on q^r.
inline Phase picard_phase_on_monomial(std::int64_t d, const Rational& r) { return Phase(Rational(-d * r)); }

struct PicardReport {
  bool global_basis_equivariant = true;  // (P.)^i is O(d)-equivariant
  bool product_invariant = true;         // C(q) commutes with the action
  std::string detail = "ok";
  bool passed() const { return global_basis_equivariant && product_invariant; }
};
PicardReport picard_action_check(const WeightData& wd, const SpectrumData& sd, std::int64_t d);

VerdictList verify_a_model(const WeightData& wd, const SpectrumData& sd, const AModelPackage& pkg);

}  // namespace wproj
