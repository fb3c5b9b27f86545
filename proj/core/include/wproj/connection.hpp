#pragma once

// Connections on a trivial bundle with poles along theta = 0 and along
// coordinate hyperplanes, and generic exact verifiers for their flatness,
// for flatness of a (-1)^n-twisted pairing, and for adjointness.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wproj/check.hpp"
#include "wproj/puiseux.hpp"

namespace wproj {

enum class DifferentialKind {
  Logarithmic,  // coefficient of dx/x, derivation x d/dx
  Plain,        // coefficient of dx, derivation d/dx
};

struct Direction {
  std::string name;
  std::size_t variable = 0;
  DifferentialKind kind = DifferentialKind::Logarithmic;
  PuiseuxMatrix matrix;

  /// The derivation dual to this direction's one-form.
  PuiseuxMatrix differentiate(const PuiseuxMatrix& m) const;
  Puiseux differentiate(const Puiseux& p) const;
};

/// Omega = theta_part * dtheta/theta + sum_v direction_v.matrix * omega_v.
struct Connection {
  std::vector<std::string> basis_labels;
  PuiseuxMatrix theta_part;
  std::vector<Direction> directions;

  std::size_t rank() const { return theta_part.size(); }
  const Direction& direction(std::string_view name) const;
};

/// Curvature vanishing: for every direction v,
///   theta d_theta Omega_v - delta_v Omega_theta + [Omega_theta, Omega_v] = 0
/// and for every pair u, v:  delta_u Omega_v - delta_v Omega_u + [Omega_u, Omega_v] = 0.
IdentityReport verify_flatness(const Connection& conn);

/// delta G_ij = sum_k Omega_ki G_kj + sum_k sigma(Omega_kj) G_ik for delta = theta d_theta and
/// every direction, sigma: theta -> -theta. Throws std::invalid_argument when
/// some nonzero entry of G is not homogeneous of theta-degree n.
IdentityReport verify_pairing_flatness(const Connection& conn, const PuiseuxMatrix& pairing, int n);

enum class AdjointMode { SelfAdjoint, SumToScalar };

/// SelfAdjoint: G A == A^T G. SumToScalar: G A + A^T G == scalar * G.
/// Throws std::invalid_argument if G is singular.
IdentityReport verify_adjoint(const PuiseuxMatrix& a, const PuiseuxMatrix& pairing, AdjointMode mode,
                              const Rational& scalar = 0);

/// New basis e'_j = g_j e_j for monomials g_j:
///   Omega' = D^{-1} Omega D + D^{-1} delta D in every direction.
Connection gauge_diagonal(const Connection& conn, const std::vector<Puiseux>& gauge);

/// Pairing in the basis e'_j = g_j e_j: G'_ij = g_i sigma(g_j) G_ij.
PuiseuxMatrix gauge_pairing(const PuiseuxMatrix& pairing, const std::vector<Puiseux>& gauge);

IdentityReport compare_connections(const Connection& lhs, const Connection& rhs);

}  // namespace wproj
