#pragma once

// The mu-parameter unfolding of the limit Frobenius type structure, its
// Frobenius potential and Euler field, and the logarithmic structure at x = 0.
//
// The unfolding parameters x_0..x_{mu-1} are Puiseux variables 0..mu-1.

#include <vector>

#include "wproj/a_model.hpp"
#include "wproj/b_model.hpp"
#include "wproj/check.hpp"
#include "wproj/connection.hpp"
#include "wproj/limits.hpp"
#include "wproj/linear_algebra.hpp"

namespace wproj {

/// constant + sum_i x_i * linear[i].
struct AffineMatrix {
  RationalMatrix constant;
  std::vector<RationalMatrix> linear;

  RationalMatrix at(const RationalVector& x) const;
  PuiseuxMatrix to_puiseux() const;
};

/// E = sum_i (euler_linear[i] x_i + euler_constant[i]) d/dx_i.
struct EulerField {
  RationalVector linear;
  RationalVector constant;
};

struct UnfoldingPackage {
  std::vector<RationalMatrix> C;
  AffineMatrix A_tilde;
  EulerField euler;
  std::vector<Rational> potential;  // c_{ijk} at index (i*mu + j)*mu + k
  std::size_t mu = 0;

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return potential[(i * mu + j) * mu + k]; }
};

std::vector<RationalMatrix> unfolding_matrices(const WeightData& wd, const SpectrumData& sd);
AffineMatrix a_tilde(const SpectrumData& sd, const std::vector<RationalMatrix>& C);
EulerField euler_field(const SpectrumData& sd);
Connection unfolded_connection(const SpectrumData& sd, const std::vector<RationalMatrix>& C, const AffineMatrix& a);

/// c_{ijk} = g(C_i C_j e_0, e_k).
std::vector<Rational> potential_coefficients(const std::vector<RationalMatrix>& C, const RationalMatrix& g);
/// sum_{ijk} c_{ijk} x_i x_j x_k / 6.
Puiseux cubic_potential(const UnfoldingPackage& pkg);
/// sum over i + j <= mu - 1 of x_i x_j x_{mu-1-i-j} / 6.
Puiseux manifold_potential(std::size_t mu);

UnfoldingPackage build_unfolding(const WeightData& wd, const SpectrumData& sd, const LimitPackage& lim);

/// The identities between C_i, A_inf and A_tilde, as one report.
IdentityReport verify_unfolding_identities(const SpectrumData& sd, const UnfoldingPackage& pkg,
                                           const PuiseuxMatrix& s_bar);

VerdictList verify_unfolding(const WeightData& wd, const SpectrumData& sd, const LimitPackage& lim,
                             const UnfoldingPackage& pkg);

/// Constant theta^n coefficient of a pairing evaluated at variable 0 = 0.
RationalMatrix pairing_at_zero(const PuiseuxMatrix& pairing, int n);

VerdictList log_structure_checks(const WeightData& wd, const AModelPackage& a, const BModelPackage& b);

}  // namespace wproj
