#include "wproj/limits.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>

#include "wproj/a_model.hpp"

namespace wproj {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

std::vector<Rational> valuations(const WeightData& wd, const SpectrumData& sd) {
  std::vector<Rational> v(wd.mu);
  for (std::size_t k = wd.n + 1; k < wd.mu; ++k) v[k] = sd.c[k];
  return v;
}

RationalMatrix nilpotent_b(const SpectrumData& sd) {
  const std::size_t mu = sd.c.size();
  RationalMatrix b(mu);
  for (std::size_t k = 0; k + 1 < mu; ++k)
    if (sd.c[k + 1] == sd.c[k]) b(k + 1, k) = -1;
  return b;
}

std::vector<std::size_t> jordan_blocks(const SpectrumData& sd) {
  std::vector<std::size_t> runs;
  for (std::size_t k = 0; k < sd.c.size(); ++k) {
    if (k == 0 || sd.c[k] != sd.c[k - 1]) runs.push_back(0);
    ++runs.back();
  }
  return runs;
}

std::vector<std::size_t> jordan_blocks_from_ranks(const RationalMatrix& nilpotent) {
  const std::size_t n = nilpotent.size();
  std::vector<std::size_t> rank{n};
  RationalMatrix p = RationalMatrix::identity(n);
  while (rank.back() > 0) {
    p = p * nilpotent;
    const std::size_t r = p.rank();
    if (r == rank.back()) return {};  // not nilpotent
    rank.push_back(r);
  }
  // #blocks of size >= p is rank(N^{p-1}) - rank(N^p).
  std::vector<std::size_t> blocks;
  for (std::size_t s = rank.size() - 1; s >= 1; --s) {
    const std::size_t at_least = rank[s - 1] - rank[s];
    const std::size_t longer = s + 1 < rank.size() ? rank[s] - rank[s + 1] : 0;
    blocks.insert(blocks.end(), at_least - longer, s);
  }
  return blocks;
}

PuiseuxMatrix limit_pairing(const WeightData& wd) {
  const std::size_t mu = wd.mu;
  const std::size_t n = wd.n;
  const int th = static_cast<int>(n);
  Integer prod_w = 1;
  Integer prod_wpow = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto w = static_cast<unsigned long>(wd.weights[i]);
    prod_w *= w;
    prod_wpow *= ipow(Integer(w), w + 1);
  }
  PuiseuxMatrix s(mu);
  for (std::size_t k = 0; k <= n; ++k) s(k, n - k) = Puiseux::theta_power(th, Rational(1) / Rational(prod_w));
  for (std::size_t k = n + 1; k < mu; ++k)
    s(k, mu + n - k) = Puiseux::theta_power(th, Rational(1) / Rational(prod_wpow));
  return s;
}

FrobeniusAlgebraData limit_cup(const WeightData& wd, const SpectrumData& sd) {
  const std::size_t mu = wd.mu;
  FrobeniusAlgebraData out;
  const Rational inv_ww = Rational(1) / Rational(wd.w_pow_w);
  for (std::size_t i = 0; i < mu; ++i) {
    RationalMatrix m(mu);
    for (std::size_t j = 0; j < mu; ++j) {
      if (i + j < mu) {
        if (sd.c[i + j] == sd.c[i] + sd.c[j]) m(i + j, j) = 1;
      } else if (1 + sd.c[i + j - mu] == sd.c[i] + sd.c[j]) {
        m(i + j - mu, j) = inv_ww;
      }
    }
    out.mult.push_back(std::move(m));
  }
  const PuiseuxMatrix s = limit_pairing(wd);
  out.pairing = RationalMatrix(mu);
  const Exponent top({}, static_cast<int>(wd.n));
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) out.pairing(i, j) = s(i, j).coefficient(top);
  out.degrees = sd.alpha;
  out.pairing_degree = Rational(static_cast<long>(wd.n));
  return out;
}

FrobeniusAlgebraData orbifold_cup(const WeightData& wd, const SpectrumData& sd) {
  const std::size_t mu = wd.mu;
  FrobeniusAlgebraData out = limit_cup(wd, sd);
  // (s_i^{-1} w_i)(s_j^{-1} w_j) = s_i^{-1} s_j^{-1} c w_k = s_i^{-1} s_j^{-1} s_k c (s_k^{-1} w_k)
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j)
      for (std::size_t k = 0; k < mu; ++k)
        if (out.mult[i](k, j) != 0) out.mult[i](k, j) *= sd.s[k] / (sd.s[i] * sd.s[j]);
  out.pairing = poincare_pairing(wd);
  return out;
}

IdentityReport check_frobenius_axioms(const FrobeniusAlgebraData& alg) {
  const std::size_t mu = alg.mult.size();
  if (!(alg.mult[0] == RationalMatrix::identity(mu))) return IdentityReport::fail("unit", 0, 0);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) {
      if (alg.mult[i].column(j) != alg.mult[j].column(i)) return IdentityReport::fail("commutativity", i, j);
      for (std::size_t l = 0; l < mu; ++l)
        if (alg.mult[i](l, j) != 0 && alg.degrees[l] != alg.degrees[i] + alg.degrees[j])
          return IdentityReport::fail("grading of product " + triple(i, j, l), i, j);
    }
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) {
      // (e_i e_j) e_k versus e_i (e_j e_k), for all k at once.
      const RationalVector ij = alg.mult[i].column(j);
      RationalMatrix left(mu);
      for (std::size_t l = 0; l < mu; ++l)
        if (ij[l] != 0) left += ij[l] * alg.mult[l];
      const RationalMatrix right = alg.mult[i] * alg.mult[j];
      if (!(left == right)) {
        const auto at = (left - right).first_nonzero();
        return IdentityReport::fail("associativity " + triple(i, j, at->second), at->first, at->second);
      }
    }
  const RationalMatrix& g = alg.pairing;
  if (!(g == g.transpose())) return IdentityReport::fail("pairing symmetry", 0, 0);
  if (g.determinant() == 0) return IdentityReport::fail("pairing nondegenerate", 0, 0);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j)
      if (g(i, j) != 0 && alg.degrees[i] + alg.degrees[j] != alg.pairing_degree)
        return IdentityReport::fail("pairing homogeneity", i, j);
  for (std::size_t c = 0; c < mu; ++c) {
    const RationalMatrix r = g * alg.mult[c] - alg.mult[c].transpose() * g;
    if (auto at = r.first_nonzero())
      return IdentityReport::fail("g(a*c, b) = g(a, b*c) for c=" + std::to_string(c), at->first, at->second);
  }
  return IdentityReport::ok();
}

bool preprimitive_test(const RationalMatrix& a0_bar, const RationalVector& e) {
  return krylov_dimension(a0_bar, e) == a0_bar.size();
}

std::vector<RationalVector> random_rational_vectors(std::size_t dim, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<RationalVector> out(count, RationalVector(dim));
  for (auto& v : out)
    for (auto& x : v) x = make_rational(num(rng), den(rng));
  return out;
}

LimitPackage build_limits(const WeightData& wd, const SpectrumData& sd) {
  LimitPackage pkg;
  pkg.valuations = valuations(wd, sd);
  pkg.B = nilpotent_b(sd);
  pkg.A0_bar = Rational(-static_cast<long>(wd.mu)) * pkg.B;
  pkg.S_bar = limit_pairing(wd);
  pkg.cup = limit_cup(wd, sd);
  pkg.cup_orb = orbifold_cup(wd, sd);
  pkg.g_bar = pkg.cup.pairing;
  return pkg;
}

VerdictList verify_limits(const WeightData& wd, const SpectrumData& sd, const LimitPackage& pkg,
                          const BModelPackage& b) {
  VerdictList out;
  const std::size_t mu = wd.mu;
  const std::size_t n = wd.n;

  std::vector<std::size_t> runs = jordan_blocks(sd);
  std::vector<std::size_t> from_ranks = jordan_blocks_from_ranks(pkg.B);
  std::sort(runs.begin(), runs.end(), std::greater<>());
  out.push_back(make_verdict("lemma_jordan.blocks", runs == from_ranks));
  {
    bool ok = true;
    std::string detail = "ok";
    RationalMatrix p = RationalMatrix::identity(mu);
    for (std::size_t k = 0; k <= mu && ok; ++k) {
      std::size_t expected = 0;
      for (std::size_t s : runs) expected += s > k ? s - k : 0;
      if (p.rank() != expected) {
        ok = false;
        detail = "rank(B^" + std::to_string(k) + ") mismatch";
      }
      p = p * pkg.B;
    }
    out.push_back(make_verdict("lemma_jordan.rank_oracle", ok, detail));
  }
  out.push_back(make_verdict("sec_limit.nilpotent", pkg.B.power(static_cast<unsigned>(mu)).is_zero()));
  out.push_back(make_verdict("sec_limit.a0_bar_is_flat_limit",
                             compare_matrices(pkg.A0_bar.to_puiseux(), a0_flat_expected(wd, sd).at_zero(0),
                                              "A0_bar = A0^flat(0)")));
  {
    bool ok = true;
    std::string detail = "ok";
    for (std::size_t k = 0; k < mu && ok; ++k)
      if (pkg.valuations[k] != (k <= n ? Rational(0) : sd.c[k])) {
        ok = false;
        detail = "v(omega_" + std::to_string(k) + ")";
      }
    out.push_back(make_verdict("sec_limit.valuations", ok, detail));
  }
  out.push_back(make_verdict("sec_limit.pairing_nondegenerate", !pkg.S_bar.determinant().is_zero()));
  {
    IdentityReport r = verify_adjoint(pkg.A0_bar.to_puiseux(), pkg.S_bar, AdjointMode::SelfAdjoint);
    if (r) r = verify_adjoint(b.A_inf.to_puiseux(), pkg.S_bar, AdjointMode::SumToScalar, Rational(static_cast<long>(n)));
    out.push_back(make_verdict("sec_limit.pairing_adjointness", r));
  }
  {
    IdentityReport r = compare_matrices(pkg.S_bar, b.S_B.map([](const Puiseux& e) { return e.at_one(0); }),
                                        "S_bar = S_B(x=1)");
    if (r) r = compare_matrices(pkg.S_bar, gauge_pairing(b.S_B, flat_gauge(sd)), "S_bar = S in the flat basis");
    out.push_back(make_verdict("sec_limit.pairing_consistency", r));
  }
  out.push_back(make_verdict("prop_orbicohring.frobenius_algebra", check_frobenius_axioms(pkg.cup)));
  out.push_back(make_verdict("prop_orbicohring.orbifold_cup", check_frobenius_axioms(pkg.cup_orb)));
  {
    // The graded product is the x-leading part of the Jacobi product in the flat basis.
    bool ok = true;
    std::string detail = "ok";
    for (std::size_t i = 0; i < mu && ok; ++i)
      for (std::size_t j = 0; j < mu && ok; ++j) {
        const ProductTerm t = jacobi_product(wd, i, j);
        const Rational shift = sd.c[t.index] - sd.c[i] - sd.c[j] + (i + j >= mu ? 1 : 0);
        const Rational coeff = shift == 0 ? t.coefficient.terms().begin()->second : Rational(0);
        for (std::size_t l = 0; l < mu && ok; ++l)
          if (pkg.cup.mult[i](l, j) != (l == t.index ? coeff : Rational(0))) {
            ok = false;
            detail = "cup(" + std::to_string(i) + "," + std::to_string(j) + ")";
          }
      }
    out.push_back(make_verdict("sec_limit.cup_is_graded_jacobi", ok, detail));
  }

  const bool manifold = wd.is_manifold();
  out.push_back(make_verdict("remark_limitepreprim.omega0",
                             preprimitive_test(pkg.A0_bar, unit_vector(mu, 0)) == manifold));
  {
    bool any = false;
    for (std::size_t k = 0; k < mu; ++k) any = any || preprimitive_test(pkg.A0_bar, unit_vector(mu, k));
    out.push_back(make_verdict("remark_limitepreprim.unit_vectors", manifold || !any));
  }
  {
    // A nilpotent matrix has a cyclic vector iff it is a single Jordan block.
    const bool single = from_ranks.size() == 1;
    std::size_t best = 0;
    for (std::size_t k = 0; k < mu; ++k) best = std::max(best, krylov_dimension(pkg.A0_bar, unit_vector(mu, k)));
    const bool ok = single == manifold && best == from_ranks.front();
    out.push_back(make_verdict("remark_limitepreprim.certificate", ok,
                               ok ? "max Krylov dimension " + std::to_string(best) + " of " + std::to_string(mu)
                                  : "block structure disagrees with the manifold criterion"));
  }
  {
    bool any = false;
    for (const auto& v : random_rational_vectors(mu, 16, 0x5eed0000ULL + mu))
      any = any || preprimitive_test(pkg.A0_bar, v);
    out.push_back(make_verdict("remark_limitepreprim.random_sample", manifold || !any));
  }
  return out;
}

}  // namespace wproj
