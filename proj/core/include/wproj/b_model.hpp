#pragma once

// Canonical B-model data for the Laurent polynomial mirror of P(w): the
// connection in the basis omega^phi, the pairing S^B, the flat and orbifold
// bases, the Jacobi-algebra product and the quantum differential operator.
//
// The parameter x is variable 0.

#include <cstdint>
#include <utility>
#include <vector>

#include "wproj/check.hpp"
#include "wproj/combinatorics.hpp"
#include "wproj/connection.hpp"
#include "wproj/linear_algebra.hpp"
#include "wproj/puiseux.hpp"

namespace wproj {

/// h_k = coeff * x^x_exp * u_0^{u_exp[0]} ... u_n^{u_exp[n]}, with
/// omega_k = h_k omega_0.
struct HMonomial {
  Rational coeff;
  int x_exp = 0;
  std::vector<std::int64_t> u_exp;
};

struct BModelPackage {
  PuiseuxMatrix A0_phi;
  RationalMatrix A_inf;
  RationalMatrix H;
  RationalMatrix R_phi;
  PuiseuxMatrix S_B;
  Connection conn_phi;
  Connection conn_flat;
  Connection conn_orb;
  PuiseuxMatrix pairing_orb;
  std::vector<HMonomial> product_h;
};

PuiseuxMatrix a0_phi(const WeightData& wd);
Connection b_connection(const WeightData& wd, const SpectrumData& sd);
PuiseuxMatrix b_pairing(const WeightData& wd);

/// diag(x^{-c_i}) and diag(x^{-c_i} s_i^{-1}).
std::vector<Puiseux> flat_gauge(const SpectrumData& sd);
std::vector<Puiseux> orbifold_gauge(const SpectrumData& sd);

struct GaugedBases {
  Connection conn_flat;
  Connection conn_orb;
  PuiseuxMatrix pairing_orb;
};
GaugedBases gauge_to_flat_and_orb(const WeightData& wd, const SpectrumData& sd);

/// The displayed closed forms the gauged connections must reproduce.
PuiseuxMatrix a0_flat_expected(const WeightData& wd, const SpectrumData& sd);
/// mu * C with q -> x: corner mu a_mu x^{1-c_{mu-1}}.
PuiseuxMatrix a0_orb_expected(const WeightData& wd, const SpectrumData& sd);
/// The same matrix with the corner additionally divided by w^w, as it is
/// usually printed. Differs from the gauge result whenever w^w != 1.
PuiseuxMatrix a0_orb_displayed(const WeightData& wd, const SpectrumData& sd);
PuiseuxMatrix pairing_orb_expected(const WeightData& wd);

std::vector<HMonomial> h_monomials(const WeightData& wd, const SpectrumData& sd);

/// [omega_i] * [omega_j] = coefficient * [omega_index].
struct ProductTerm {
  Puiseux coefficient;
  std::size_t index = 0;
  friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};
ProductTerm jacobi_product(const WeightData& wd, std::size_t i, std::size_t j);

enum class QdePrefactor {
  AsStated,      // w^w theta^mu
  SignAdjusted,  // w^w (-theta)^mu
};

/// [prefactor * prod_i (x nabla - c_i) - x] applied to omega_0, as a
/// coordinate vector in the omega^phi basis.
std::vector<Puiseux> qde_residual(const WeightData& wd, const SpectrumData& sd, QdePrefactor prefactor);

BModelPackage build_b_model(const WeightData& wd, const SpectrumData& sd);

VerdictList verify_b_model(const WeightData& wd, const SpectrumData& sd, const BModelPackage& pkg);

}  // namespace wproj
