#pragma once

// Limit structures at x = 0: valuations, the nilpotent operator, Jordan
// blocks, the limit pairing, the cup product on the limit algebra and the
// pre-primitivity test.

#include <cstdint>
#include <vector>

#include "wproj/b_model.hpp"
#include "wproj/check.hpp"
#include "wproj/combinatorics.hpp"
#include "wproj/linear_algebra.hpp"

namespace wproj {

/// Structure constants: mult[i] is left multiplication by basis vector i
/// (columns are images). degrees grade the basis; pairing is constant.
struct FrobeniusAlgebraData {
  std::vector<RationalMatrix> mult;
  RationalMatrix pairing;
  std::vector<Rational> degrees;
  Rational pairing_degree;  // g(e_i, e_j) != 0 forces deg i + deg j = this
};

struct LimitPackage {
  std::vector<Rational> valuations;
  RationalMatrix B;
  RationalMatrix A0_bar;
  PuiseuxMatrix S_bar;
  RationalMatrix g_bar;  // theta^n coefficient of S_bar
  FrobeniusAlgebraData cup;
  FrobeniusAlgebraData cup_orb;  // same product in the basis 1_f P^j
};

std::vector<Rational> valuations(const WeightData& wd, const SpectrumData& sd);
RationalMatrix nilpotent_b(const SpectrumData& sd);

/// Lengths of the maximal constant runs of c.
std::vector<std::size_t> jordan_blocks(const SpectrumData& sd);
/// Block sizes of a nilpotent matrix from the ranks of its powers, descending.
std::vector<std::size_t> jordan_blocks_from_ranks(const RationalMatrix& nilpotent);

PuiseuxMatrix limit_pairing(const WeightData& wd);
FrobeniusAlgebraData limit_cup(const WeightData& wd, const SpectrumData& sd);
/// limit_cup transported along omega_i = s_i 1_{c_i} P^{r(i)}, paired with the
/// orbifold Poincare pairing.
FrobeniusAlgebraData orbifold_cup(const WeightData& wd, const SpectrumData& sd);

/// Unit (basis vector 0), commutativity, associativity, grading and
/// invariance of the pairing, nondegeneracy.
IdentityReport check_frobenius_axioms(const FrobeniusAlgebraData& algebra);

/// (e, Ae, ..., A^{mu-1}e) is a basis.
bool preprimitive_test(const RationalMatrix& a0_bar, const RationalVector& e);

/// Deterministic sample of rational vectors for the pre-primitivity sweep.
std::vector<RationalVector> random_rational_vectors(std::size_t dim, std::size_t count, std::uint64_t seed);

LimitPackage build_limits(const WeightData& wd, const SpectrumData& sd);

VerdictList verify_limits(const WeightData& wd, const SpectrumData& sd, const LimitPackage& pkg,
                          const BModelPackage& b);

}  // namespace wproj
