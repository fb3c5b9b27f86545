#pragma once

// Weight-derived combinatorics: sectors F = {l / w_i}, the stepping sequence
// a(k), the c- and alpha-sequences and the derived coefficients r, s and a_i.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wproj/check.hpp"
#include "wproj/rational.hpp"

namespace wproj {

struct Sector {
  Rational f;                     // fraction in [0, 1)
  std::vector<std::size_t> members;  // S_f = { j : w_j f is an integer }
  std::size_t d = 0;              // #S_f
  Integer m;                      // product of w_j over S_f
};

struct WeightData {
  std::vector<std::int64_t> weights;  // (w_0 = 1, w_1, ..., w_n)
  std::size_t n = 0;
  std::size_t mu = 0;  // w_0 + ... + w_n
  std::vector<Sector> sectors;  // strictly increasing in f
  Integer w_pow_w;  // prod_i w_i^{w_i}

  std::size_t dim() const { return mu; }
  const Integer& m1() const { return sectors.front().m; }
  bool is_manifold() const { return mu == n + 1; }
  std::int64_t max_weight() const;
};

struct SpectrumData {
  std::vector<std::vector<std::int64_t>> a;  // a(0..mu)
  std::vector<std::size_t> i_seq;            // i(0..mu-1)
  std::vector<Rational> c;                   // c_0..c_{mu-1}
  std::vector<Rational> alpha;               // alpha_k = k - mu c_k
  std::vector<std::size_t> r;                // r(i) = #{k < i : c_k = c_i}
  std::vector<Rational> s;                   // s_i = prod_k w_k^{-ceil(c_i w_k)}
  std::vector<Rational> a_coeff;             // a_1..a_mu stored at [0..mu-1]

  /// a_i for 1 <= i <= mu.
  const Rational& subdiagonal(std::size_t i) const { return a_coeff.at(i - 1); }
};

/// Throws InputError unless weights = (1, w_1, ..., w_n), n >= 1, all w_i >= 1.
WeightData build_weight_data(std::span<const std::int64_t> weights);

/// Runs a(k+1) = a(k) + 1_{i(k)} with the smallest-index tie-break and
/// fills a, i_seq, c and alpha.
SpectrumData stepping_sequence(const WeightData& wd);

/// Sorted multiset {f_i repeated d_i times}; independent of the recursion.
std::vector<Rational> c_sequence_oracle(const WeightData& wd);

struct RepetitionScaling {
  std::vector<std::size_t> r;
  std::vector<Rational> s;
};
RepetitionScaling repetition_and_scaling(const SpectrumData& sd, const WeightData& wd);

/// a_i = 1/m_j when i = d_1 + ... + d_j, else 1, for i = 1..mu.
std::vector<Rational> subdiagonal_coeffs(const WeightData& wd);

/// Everything above in one go.
SpectrumData compute_spectrum(const WeightData& wd);

/// Index of the sector whose fraction equals f; throws if absent.
std::size_t sector_index(const WeightData& wd, const Rational& f);

/// Position of the first basis element of each sector: d_1 + ... + d_{i-1}.
std::vector<std::size_t> sector_offsets(const WeightData& wd);

}  // namespace wproj

namespace wproj {

/// Dual-oracle c-sequence, the symmetry identities of c and alpha, the
/// stepping-sequence endpoints and the integrality criterion for alpha.
VerdictList verify_combinatorics(const WeightData& wd, const SpectrumData& sd);

}  // namespace wproj
