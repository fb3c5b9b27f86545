#pragma once

// Reference computations for the tests. Each one reaches its answer by a
// route that shares no code with the library routine it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "wproj/connection.hpp"
#include "wproj/puiseux.hpp"
#include "wproj/rational.hpp"

namespace oracle {

using wproj::Puiseux;
using wproj::PuiseuxMatrix;
using wproj::Rational;

/// Sorted multiset of all l/w_i, 0 <= l < w_i: the c-sequence.
inline std::vector<Rational> c_sequence(const std::vector<std::int64_t>& w) {
  std::vector<Rational> out;
  for (std::int64_t wi : w)
    for (std::int64_t l = 0; l < wi; ++l) out.push_back(wproj::make_rational(l, wi));
  std::sort(out.begin(), out.end());
  return out;
}

/// Leibniz expansion over all permutations.
inline Puiseux leibniz_determinant(const PuiseuxMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Puiseux total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Puiseux term(1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m(i, perm[i]);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

using Section = std::vector<Puiseux>;

/// nabla_X applied to a section, X being theta d/dtheta (dir == nullptr) or a direction.
inline Section covariant(const wproj::Connection& conn, const wproj::Direction* dir, const Section& s) {
  const std::size_t n = s.size();
  const PuiseuxMatrix& omega = dir ? dir->matrix : conn.theta_part;
  Section out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = dir ? dir->differentiate(s[i]) : s[i].theta_log_derivative();
    for (std::size_t j = 0; j < n; ++j)
      if (!omega(i, j).is_zero() && !s[j].is_zero()) out[i] += omega(i, j) * s[j];
  }
  return out;
}

/// Curvature as the commutator of covariant derivatives on basis sections
/// (the coordinate fields commute). True when every such commutator vanishes.
inline bool flat_by_sections(const wproj::Connection& conn) {
  const std::size_t n = conn.rank();
  std::vector<const wproj::Direction*> fields{nullptr};
  for (const auto& d : conn.directions) fields.push_back(&d);
  for (std::size_t a = 0; a < fields.size(); ++a)
    for (std::size_t b = a + 1; b < fields.size(); ++b)
      for (std::size_t j = 0; j < n; ++j) {
        Section e(n);
        e[j] = Puiseux(1);
        const Section ab = covariant(conn, fields[a], covariant(conn, fields[b], e));
        const Section ba = covariant(conn, fields[b], covariant(conn, fields[a], e));
        for (std::size_t i = 0; i < n; ++i)
          if (!(ab[i] == ba[i])) return false;
      }
  return true;
}

}  // namespace oracle
