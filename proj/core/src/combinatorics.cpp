#include "wproj/combinatorics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace wproj {

std::int64_t WeightData::max_weight() const {
  return *std::max_element(weights.begin(), weights.end());
}

WeightData build_weight_data(std::span<const std::int64_t> weights) {
  if (weights.size() < 2) throw InputError("need at least two weights (w0, w1, ...)");
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] < 1)
      throw InputError("weight w" + std::to_string(i) + " = " + std::to_string(weights[i]) + " is not positive");
  if (weights[0] != 1) throw InputError("first weight must be 1 (got " + std::to_string(weights[0]) + ")");

  WeightData wd;
  wd.weights.assign(weights.begin(), weights.end());
  wd.n = weights.size() - 1;
  wd.w_pow_w = 1;
  std::set<Rational> fractions;
  for (std::int64_t w : weights) {
    wd.mu += static_cast<std::size_t>(w);
    wd.w_pow_w *= ipow(Integer(static_cast<long>(w)), static_cast<unsigned long>(w));
    for (std::int64_t l = 0; l < w; ++l) fractions.insert(make_rational(l, w));
  }
  for (const Rational& f : fractions) {
    Sector sec;
    sec.f = f;
    sec.m = 1;
    for (std::size_t j = 0; j < weights.size(); ++j)
      if (is_integer(Rational(f * weights[j]))) {
        sec.members.push_back(j);
        sec.m *= static_cast<long>(weights[j]);
      }
    sec.d = sec.members.size();
    wd.sectors.push_back(std::move(sec));
  }
  return wd;
}

SpectrumData stepping_sequence(const WeightData& wd) {
  const std::size_t len = wd.n + 1;
  SpectrumData sd;
  std::vector<std::int64_t> a(len, 0);
  sd.a.push_back(a);
  for (std::size_t k = 0; k < wd.mu; ++k) {
    std::size_t best = 0;
    Rational best_ratio = make_rational(a[0], wd.weights[0]);
    for (std::size_t i = 1; i < len; ++i) {
      Rational ratio = make_rational(a[i], wd.weights[i]);
      if (ratio < best_ratio) {  // strict: ties keep the smaller index
        best = i;
        best_ratio = ratio;
      }
    }
    sd.i_seq.push_back(best);
    sd.c.push_back(best_ratio);
    sd.alpha.push_back(Rational(static_cast<long>(k)) - Rational(static_cast<long>(wd.mu)) * best_ratio);
    a[best] += 1;
    sd.a.push_back(a);
  }
  return sd;
}

std::vector<Rational> c_sequence_oracle(const WeightData& wd) {
  std::vector<Rational> out;
  for (const auto& sec : wd.sectors) out.insert(out.end(), sec.d, sec.f);
  std::sort(out.begin(), out.end());
  return out;
}

RepetitionScaling repetition_and_scaling(const SpectrumData& sd, const WeightData& wd) {
  RepetitionScaling rs;
  for (std::size_t i = 0; i < sd.c.size(); ++i) {
    rs.r.push_back(static_cast<std::size_t>(std::count(sd.c.begin(), sd.c.begin() + static_cast<long>(i), sd.c[i])));
    Rational s = 1;
    for (std::int64_t w : wd.weights) {
      const Integer e = ceil_of(Rational(sd.c[i] * w));
      s *= rpow(Rational(static_cast<long>(w)), -e.get_si());
    }
    rs.s.push_back(s);
  }
  return rs;
}

std::vector<Rational> subdiagonal_coeffs(const WeightData& wd) {
  std::vector<Rational> out(wd.mu, Rational(1));
  std::size_t boundary = 0;
  for (const auto& sec : wd.sectors) {
    boundary += sec.d;
    out[boundary - 1] = Rational(1) / Rational(sec.m);
  }
  return out;
}

SpectrumData compute_spectrum(const WeightData& wd) {
  SpectrumData sd = stepping_sequence(wd);
  auto rs = repetition_and_scaling(sd, wd);
  sd.r = std::move(rs.r);
  sd.s = std::move(rs.s);
  sd.a_coeff = subdiagonal_coeffs(wd);
  return sd;
}

std::size_t sector_index(const WeightData& wd, const Rational& f) {
  for (std::size_t i = 0; i < wd.sectors.size(); ++i)
    if (wd.sectors[i].f == f) return i;
  throw std::out_of_range("no sector with fraction " + to_string(f));
}

std::vector<std::size_t> sector_offsets(const WeightData& wd) {
  std::vector<std::size_t> out;
  std::size_t acc = 0;
  for (const auto& sec : wd.sectors) {
    out.push_back(acc);
    acc += sec.d;
  }
  return out;
}

}  // namespace wproj

namespace wproj {

VerdictList verify_combinatorics(const WeightData& wd, const SpectrumData& sd) {
  VerdictList out;
  const std::size_t n = wd.n;
  const std::size_t mu = wd.mu;

  out.push_back(make_verdict("sec_combinatorics.c_sequence_oracle", sd.c == c_sequence_oracle(wd)));

  {
    bool ok = true;
    std::string detail = "ok";
    for (std::size_t k = 0; k <= n && ok; ++k) ok = sd.c[k] == 0;
    if (ok && mu > n + 1) ok = sd.c[n + 1] == make_rational(1, wd.max_weight());
    if (!ok) detail = "c_0..c_n = 0 or c_{n+1} = 1/max w violated";
    for (std::size_t k = n + 1; k < mu && ok; ++k)
      if (sd.c[k] + sd.c[mu + n - k] != 1) {
        ok = false;
        detail = "c_k + c_{mu+n-k} != 1 at k=" + std::to_string(k);
      }
    out.push_back(make_verdict("lemma_lessk.c_symmetry", ok, detail));
  }
  {
    bool ok = true;
    std::string detail = "ok";
    const Rational nn(static_cast<long>(n));
    for (std::size_t k = 0; k < mu; ++k)
      if (sd.alpha[k] != Rational(static_cast<long>(k)) - Rational(static_cast<long>(mu)) * sd.c[k]) {
        ok = false;
        detail = "alpha_k != k - mu c_k at k=" + std::to_string(k);
      }
    for (std::size_t k = n + 1; k < mu && ok; ++k)
      if (sd.alpha[k] + sd.alpha[mu + n - k] != nn) {
        ok = false;
        detail = "alpha_k + alpha_{mu+n-k} != n at k=" + std::to_string(k);
      }
    for (std::size_t k = 0; k <= n && ok; ++k)
      if (sd.alpha[k] + sd.alpha[n - k] != nn) {
        ok = false;
        detail = "alpha_k + alpha_{n-k} != n at k=" + std::to_string(k);
      }
    for (std::size_t k = 0; k + 1 < mu && ok; ++k)
      if (sd.alpha[k + 1] > sd.alpha[k] + 1) {
        ok = false;
        detail = "alpha_{k+1} > alpha_k + 1 at k=" + std::to_string(k);
      }
    out.push_back(make_verdict("cor_lesalphak.alpha_symmetry", ok, detail));
  }
  {
    const std::size_t len = n + 1;
    std::vector<std::int64_t> a1(len, 0), ones(len, 1);
    a1[0] = 1;
    bool ok = sd.a.size() == mu + 1 && sd.a[1] == a1 && sd.a[n + 1] == ones && sd.a[mu] == wd.weights;
    for (std::size_t k = 0; k < sd.a.size() && ok; ++k) {
      std::int64_t sum = 0;
      for (auto v : sd.a[k]) sum += v;
      ok = sum == static_cast<std::int64_t>(k);
    }
    out.push_back(make_verdict("sec_combinatorics.stepping_endpoints", ok));
  }
  {
    bool all_integral = std::all_of(sd.alpha.begin(), sd.alpha.end(), [](const Rational& r) { return is_integer(r); });
    bool divides = std::all_of(wd.weights.begin(), wd.weights.end(),
                               [&](std::int64_t w) { return static_cast<std::int64_t>(mu) % w == 0; });
    out.push_back(make_verdict("sec_combinatorics.alpha_integrality", all_integral == divides));
  }
  {
    std::size_t total = 0;
    for (const auto& sec : wd.sectors) total += sec.d;
    const bool sorted = std::is_sorted(sd.c.begin(), sd.c.end());
    out.push_back(make_verdict("sec_combinatorics.multiplicity_sum", total == mu && sorted));
  }
  return out;
}

}  // namespace wproj
