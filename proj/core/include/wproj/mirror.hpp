#pragma once

// The mirror map (P.)^j -> omega^phi_j with (z, q) -> (theta, x). Both sides
// already use theta and variable 0, so every comparison is entrywise.

#include "wproj/a_model.hpp"
#include "wproj/b_model.hpp"
#include "wproj/check.hpp"

namespace wproj {

/// Connection matrices, pairings and A_inf agree. With scale != 1 the
/// identification is rescaled by that constant on both sides first.
VerdictList verify_mirror(const AModelPackage& a, const BModelPackage& b, const Rational& scale = 1);
VerdictList verify_mirror(const WeightData& wd, const SpectrumData& sd);

/// P^{.i} .q P^{.j}, read off from powers of C^phi, against jacobi_product.
IdentityReport verify_product_mirror(const WeightData& wd, const AModelPackage& a);

}  // namespace wproj
