// Acceptance runner: one PASS/FAIL line per criterion.
//   wproj_acceptance                 all criteria
//   wproj_acceptance --criterion N   only criterion N

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wproj/a_model.hpp"
#include "wproj/b_model.hpp"
#include "wproj/combinatorics.hpp"
#include "wproj/limits.hpp"
#include "wproj/mirror.hpp"
#include "wproj/report.hpp"
#include "wproj/unfolding.hpp"

using namespace wproj;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

Rational q(long a, long b = 1) { return make_rational(a, b); }

std::string tuple(const std::vector<std::int64_t>& w) { return "(" + format_weights(w) + ")"; }

// Checks the named verdicts of one report; every name must be present.
void require(Outcome& out, const Report& r, const std::set<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& v : r.verdicts) {
    if (!names.count(v.verdict.name)) continue;
    seen.insert(v.verdict.name);
    if (!v.verdict.passed) out.fail(tuple(r.weights) + " " + v.verdict.name + ": " + v.verdict.detail);
  }
  for (const auto& n : names)
    if (!seen.count(n)) out.fail(tuple(r.weights) + " missing verdict " + n);
}

void for_each_tuple(std::size_t mu_max, const std::function<void(const std::vector<std::int64_t>&)>& f) {
  for (const auto& w : enumerate_weights(mu_max)) f(w);
}

using Table = std::map<std::pair<std::size_t, std::size_t>, std::pair<Rational, std::size_t>>;

void check_table(Outcome& out, const FrobeniusAlgebraData& alg, const Table& table, const std::string& label) {
  const std::size_t mu = alg.mult.size();
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) {
      RationalVector want(mu);
      auto it = table.find({std::min(i, j), std::max(i, j)});
      if (it != table.end()) want[it->second.second] = it->second.first;
      if (alg.mult[i].column(j) != want)
        out.fail(label + " entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

Outcome criterion1() {
  Outcome out;
  const WeightData wd = build_weight_data(std::vector<std::int64_t>{1, 2, 2});
  const SpectrumData sd = compute_spectrum(wd);
  if (sd.c != std::vector<Rational>{0, 0, 0, q(1, 2), q(1, 2)}) out.fail("c sequence");
  if (sd.alpha != std::vector<Rational>{0, 1, 2, q(1, 2), q(3, 2)}) out.fail("alpha sequence");

  PuiseuxMatrix c(5);
  c(0, 4) = Puiseux::x_power(q(1, 4), q(1, 2));
  c(1, 0) = Puiseux(1);
  c(2, 1) = Puiseux(1);
  c(3, 2) = Puiseux::x_power(q(1, 4), q(1, 2));
  c(4, 3) = Puiseux(1);
  if (!(quantum_matrix_C(wd, sd) == c)) out.fail("C(q)");

  Table orb, cup;
  for (std::size_t j = 0; j < 5; ++j) orb[{0, j}] = cup[{0, j}] = {1, j};
  orb[{1, 1}] = cup[{1, 1}] = {1, 2};
  orb[{1, 3}] = cup[{1, 3}] = {1, 4};
  orb[{3, 3}] = {1, 1};
  orb[{3, 4}] = {1, 2};
  cup[{3, 3}] = {q(1, 16), 1};
  cup[{3, 4}] = {q(1, 16), 2};
  check_table(out, orbifold_cup(wd, sd), orb, "orbifold cup");
  check_table(out, limit_cup(wd, sd), cup, "limit cup");
  return out;
}

Outcome criterion2() {
  Outcome out;
  std::size_t count = 0;
  for_each_tuple(12, [&](const auto& w) {
    ++count;
    const SpectrumData sd = stepping_sequence(build_weight_data(w));
    if (sd.c != oracle::c_sequence(w)) out.fail(tuple(w) + " stepping != sorted multiset");
  });
  out.detail = out.ok ? std::to_string(count) + " tuples" : out.detail;
  return out;
}

Outcome criterion3() {
  Outcome out;
  const std::set<std::string> names{
      "prop_nabla.flatness_1f",         "prop_nabla.flatness_P",          "prop_nabla.pairing_flatness_1f",
      "prop_nabla.pairing_flatness_P",  "prop_nabla.adjointness",         "thm_basevarphi.flatness",
      "eq_paring.pairing_flatness",     "lemma_symetrie.a0_self_adjoint", "lemma_symetrie.a_inf_sum",
      "sec_flat.flat_flatness",         "sec_flat.orb_flatness",          "cor_orbipairing.pairing_flatness",
      "sec_limit.pairing_adjointness",  "sec_unfolding.flatness",         "sec_unfolding.pairing_flatness"};
  for_each_tuple(12, [&](const auto& w) {
    require(out, run_report(w), names);
    // Independent curvature oracle on the two connections of the mirror statement.
    const WeightData wd = build_weight_data(w);
    const SpectrumData sd = compute_spectrum(wd);
    if (!oracle::flat_by_sections(b_connection(wd, sd))) out.fail(tuple(w) + " section oracle: conn_phi");
    if (!oracle::flat_by_sections(a_connections(wd, sd).conn_P)) out.fail(tuple(w) + " section oracle: conn_P");
  });
  return out;
}

Outcome criterion4() {
  Outcome out;
  for_each_tuple(12, [&](const auto& w) {
    const WeightData wd = build_weight_data(w);
    const SpectrumData sd = compute_spectrum(wd);
    const AModelPackage a = build_a_model(wd, sd);
    for (const auto& v : verify_mirror(a, build_b_model(wd, sd)))
      if (!v.passed) out.fail(tuple(w) + " " + v.name + ": " + v.detail);
    if (auto r = verify_product_mirror(wd, a); !r) out.fail(tuple(w) + " product: " + r.describe());
  });
  return out;
}

Outcome criterion5() {
  Outcome out;
  std::size_t bad = 0, total = 0;
  for_each_tuple(8, [&](const auto& w) {
    ++total;
    const WeightData wd = build_weight_data(w);
    const SpectrumData sd = compute_spectrum(wd);
    const auto residual = qde_residual(wd, sd, QdePrefactor::AsStated);
    for (std::size_t k = 0; k < residual.size(); ++k)
      if (!residual[k].is_zero()) {
        if (out.ok) out.fail(tuple(w) + " residual e" + std::to_string(k) + " coefficient " + residual[k].to_string());
        ++bad;
        break;
      }
  });
  if (!out.ok) out.detail += "; " + std::to_string(bad) + " of " + std::to_string(total) + " tuples not annihilated";
  return out;
}

Outcome criterion6() {
  Outcome out;
  const std::set<std::string> names{"lemma_jordan.blocks",
                                    "lemma_jordan.rank_oracle",
                                    "sec_limit.nilpotent",
                                    "sec_limit.a0_bar_is_flat_limit",
                                    "sec_limit.pairing_nondegenerate",
                                    "sec_limit.pairing_consistency",
                                    "prop_orbicohring.frobenius_algebra",
                                    "prop_orbicohring.orbifold_cup",
                                    "remark_limitepreprim.omega0",
                                    "remark_limitepreprim.unit_vectors"};
  for_each_tuple(12, [&](const auto& w) {
    require(out, run_report(w), names);
    // Closed-form limit pairing values.
    const WeightData wd = build_weight_data(w);
    Integer pw = 1, pww = 1;
    for (std::size_t i = 1; i <= wd.n; ++i) {
      pw *= static_cast<unsigned long>(wd.weights[i]);
      pww *= ipow(Integer(static_cast<unsigned long>(wd.weights[i])), static_cast<unsigned long>(wd.weights[i] + 1));
    }
    const PuiseuxMatrix s = limit_pairing(wd);
    const int n = static_cast<int>(wd.n);
    for (std::size_t i = 0; i < wd.mu; ++i)
      for (std::size_t j = 0; j < wd.mu; ++j) {
        Puiseux want;
        if (i + j == wd.n) want = Puiseux::theta_power(n, Rational(1) / Rational(pw));
        if (i > wd.n && i + j == wd.mu + wd.n) want = Puiseux::theta_power(n, Rational(1) / Rational(pww));
        if (!(s(i, j) == want)) out.fail(tuple(w) + " S_bar entry");
      }
  });
  return out;
}

Outcome criterion7() {
  Outcome out;
  const std::set<std::string> names{"sec_unfolding.identities", "cor_existfrobcan.potential_symmetry"};
  for_each_tuple(12, [&](const auto& w) { require(out, run_report(w), names); });
  for (std::size_t mu = 2; mu <= 6; ++mu) {
    const std::vector<std::int64_t> w(mu, 1);
    const WeightData wd = build_weight_data(w);
    const SpectrumData sd = compute_spectrum(wd);
    const LimitPackage lim = build_limits(wd, sd);
    const UnfoldingPackage pkg = build_unfolding(wd, sd, lim);
    Puiseux closed;
    for (std::size_t i = 0; i < mu; ++i)
      for (std::size_t j = 0; i + j < mu; ++j)
        closed += Puiseux::x_power(q(1, 6), 1, 0, i) * Puiseux::x_power(1, 1, 0, j) *
                  Puiseux::x_power(1, 1, 0, mu - 1 - i - j);
    if (!(cubic_potential(pkg) == closed)) out.fail(tuple(w) + " potential");
  }
  return out;
}

Outcome criterion8() {
  Outcome out;
  for_each_tuple(12, [&](const auto& w) {
    const WeightData wd = build_weight_data(w);
    const SpectrumData sd = compute_spectrum(wd);
    const int n = static_cast<int>(wd.n);
    const std::size_t rb = pairing_at_zero(b_pairing(wd), n).rank();
    const std::size_t ra = pairing_at_zero(pairing_P_basis(wd, sd), n).rank();
    if (rb != wd.n + 1) out.fail(tuple(w) + " rank S_B(0) = " + std::to_string(rb));
    if ((rb == wd.mu) != wd.is_manifold()) out.fail(tuple(w) + " dichotomy on the B-side");
    if (ra != rb) out.fail(tuple(w) + " A-side rank " + std::to_string(ra));
  });
  return out;
}

Outcome criterion9() {
  Outcome out;
  for (const auto& w : std::vector<std::vector<std::int64_t>>{{1, 1}, {1, 2, 2}, {1, 2, 3, 5}}) {
    if (emit_json(run_report(w)) != emit_json(run_report(w))) out.fail(tuple(w) + " JSON differs between runs");
    if (emit_latex(run_report(w)) != emit_latex(run_report(w))) out.fail(tuple(w) + " LaTeX differs between runs");
  }
  if (emit_json(run_sweep(8, {}, 4)) != emit_json(run_sweep(8, {}, 1)))
    out.fail("sweep output depends on the thread count");
  const SweepReport sweep = run_sweep(12);
  if (!sweep.passed()) {
    std::map<std::string, std::size_t> by_name;
    for (const auto& f : sweep.failures) ++by_name[f.name];
    std::ostringstream os;
    os << "sweep mu <= 12 exits nonzero:";
    for (const auto& [name, k] : by_name) os << " " << name << " x" << k;
    out.fail(os.str());
  }
  return out;
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)();
  double budget_s;  // 0: none
};

const Criterion kCriteria[] = {
    {1, "P(1,2,2) golden fixture", criterion1, 1},
    {2, "dual-oracle c-sequence, mu <= 12", criterion2, 5},
    {3, "flatness, pairing flatness and adjointness, mu <= 12", criterion3, 60},
    {4, "mirror theorem and product mirror, mu <= 12", criterion4, 0},
    {5, "QDE annihilates e0, mu <= 8", criterion5, 30},
    {6, "Jordan blocks, limit pairing, Frobenius algebra, pre-primitivity", criterion6, 0},
    {7, "unfolding identities and potential", criterion7, 0},
    {8, "logarithmic degeneracy of both pairings", criterion8, 0},
    {9, "determinism and sweep exit status", criterion9, 0},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: wproj_acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > 9) {
    std::cerr << "criterion must be 1..9\n";
    return 2;
  }
  bool all_ok = true;
  for (const auto& c : kCriteria) {
    if (only && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) o.fail("over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget");
    all_ok = all_ok && o.ok;
    std::cout << "criterion " << c.id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.title;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << "  [" << t.str() << " s]";
    if (!o.detail.empty()) std::cout << "  (" << o.detail << ")";
    std::cout << std::endl;
  }
  return all_ok ? 0 : 1;
}
