#include "wproj/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "wproj/a_model.hpp"
#include "wproj/b_model.hpp"
#include "wproj/combinatorics.hpp"
#include "wproj/limits.hpp"
#include "wproj/mirror.hpp"
#include "wproj/unfolding.hpp"

namespace wproj {

namespace {

using Clock = std::chrono::steady_clock;

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

Json product_entry(const Puiseux& coeff, std::size_t index) {
  return Json{{"coeff", to_json(coeff)}, {"index", index}};
}

Json cup_table(const std::vector<RationalMatrix>& mult) {
  Json table = Json::array();
  for (std::size_t i = 0; i < mult.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < mult.size(); ++j) {
      Json entry = nullptr;
      for (std::size_t l = 0; l < mult.size(); ++l)
        if (mult[i](l, j) != 0) entry = product_entry(Puiseux(mult[i](l, j)), l);
      row.push_back(std::move(entry));
    }
    table.push_back(std::move(row));
  }
  return table;
}

bool matches(const std::string& token, const GroupedVerdict& v) {
  return token == "all" || token == v.group || v.verdict.name.rfind(token, 0) == 0;
}

// --- LaTeX --------------------------------------------------------------------

std::string latex_rational(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  std::string sign = r < 0 ? "-" : "";
  return sign + "\\frac{" + Integer(abs(r.get_num())).get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string latex_puiseux(const Puiseux& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const Rational mag = abs(c);
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    std::string body;
    if (mag != 1 || e.is_zero()) body = latex_rational(mag);
    const Rational& r = e.x_exp(0);
    if (r != 0) body += r == 1 ? var : var + "^{" + (is_integer(r) ? r.get_num().get_str() : r.get_str()) + "}";
    if (e.theta != 0) body += e.theta == 1 ? "\\theta" : "\\theta^{" + std::to_string(e.theta) + "}";
    out += body;
  }
  return out;
}

std::string latex_matrix(const Json& m, const std::string& var) {
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (const auto& row : m) {
    bool first = true;
    for (const auto& e : row) {
      os << (first ? "  " : " & ") << latex_puiseux(puiseux_from_json(e), var);
      first = false;
    }
    os << " \\\\\n";
  }
  os << "\\end{pmatrix}";
  return os.str();
}

std::string latex_table(const Json& table, const std::string& var) {
  const std::size_t mu = table.size();
  std::ostringstream os;
  os << "\\begin{tabular}{c|" << std::string(mu, 'c') << "}\n  ";
  for (std::size_t j = 0; j < mu; ++j) os << " & $\\omega_{" << j << "}$";
  os << " \\\\\n  \\hline\n";
  for (std::size_t i = 0; i < mu; ++i) {
    os << "  $\\omega_{" << i << "}$";
    for (std::size_t j = 0; j < mu; ++j) {
      const Json& e = table[i][j];
      if (e.is_null()) {
        os << " & $0$";
        continue;
      }
      const Puiseux c = puiseux_from_json(e["coeff"]);
      const std::string w = "\\omega_{" + std::to_string(e["index"].get<std::size_t>()) + "}";
      os << " & $" << (c == Puiseux(1) ? w : latex_puiseux(c, var) + w) << "$";
    }
    os << " \\\\\n";
  }
  os << "\\end{tabular}";
  return os.str();
}

}  // namespace

bool Report::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const GroupedVerdict& v) { return v.verdict.passed; });
}

std::string format_weights(std::span<const std::int64_t> weights) {
  std::string out;
  for (std::size_t i = 0; i < weights.size(); ++i) out += (i ? "," : "") + std::to_string(weights[i]);
  return out;
}

std::vector<std::int64_t> parse_weights(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw InputError("malformed weight '" + item + "' in '" + text + "' (expected comma-separated integers)");
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Report run_report(std::span<const std::int64_t> weights, const ReportOptions& options) {
  const auto t_start = Clock::now();
  WeightData wd = build_weight_data(weights);
  if (wd.mu > kMaxMu)
    throw InputError("mu = " + std::to_string(wd.mu) + " exceeds the supported maximum " + std::to_string(kMaxMu));

  Json timings;
  auto lap = [&timings, last = Clock::now()](const char* stage) mutable {
    const auto now = Clock::now();
    timings[stage] = std::chrono::duration<double, std::milli>(now - last).count();
    last = now;
  };

  const SpectrumData sd = compute_spectrum(wd);
  lap("combinatorics");
  const AModelPackage a = build_a_model(wd, sd);
  lap("a_model");
  const BModelPackage b = build_b_model(wd, sd);
  lap("b_model");
  const LimitPackage lim = build_limits(wd, sd);
  lap("limits");
  const UnfoldingPackage unf = build_unfolding(wd, sd, lim);
  lap("unfolding");

  std::vector<GroupedVerdict> all;
  auto add = [&all](const std::string& group, const VerdictList& list) {
    for (const auto& v : list) all.push_back({group, v});
  };
  add("combinatorics", verify_combinatorics(wd, sd));
  add("a_model", verify_a_model(wd, sd, a));
  add("b_model", verify_b_model(wd, sd, b));
  {
    VerdictList m = verify_mirror(a, b);
    VerdictList scaled = verify_mirror(a, b, Rational(3));
    const bool invariant = std::equal(m.begin(), m.end(), scaled.begin(), scaled.end(),
                                      [](const Verdict& x, const Verdict& y) { return x.passed == y.passed; });
    m.push_back(make_verdict("thm_quantum.scale_invariance", invariant));
    m.push_back(make_verdict("cor_productJacobi.product", verify_product_mirror(wd, a)));
    add("mirror", m);
  }
  add("limits", verify_limits(wd, sd, lim, b));
  add("unfolding", verify_unfolding(wd, sd, lim, unf));
  add("log", log_structure_checks(wd, a, b));
  lap("verification");

  Report report;
  report.weights = wd.weights;
  if (options.verify.empty()) {
    report.verdicts = std::move(all);
  } else {
    for (const auto& token : options.verify)
      if (std::none_of(all.begin(), all.end(), [&](const GroupedVerdict& v) { return matches(token, v); }))
        throw InputError("--verify: '" + token + "' names no group or check");
    for (auto& v : all)
      if (std::any_of(options.verify.begin(), options.verify.end(), [&](const std::string& t) { return matches(t, v); }))
        report.verdicts.push_back(std::move(v));
  }

  Json& doc = report.document;
  doc["weights"] = wd.weights;
  doc["n"] = wd.n;
  doc["mu"] = wd.mu;
  doc["w_pow_w"] = wd.w_pow_w.get_str();
  for (const auto& sec : wd.sectors)
    doc["sectors"].push_back({{"f", to_string(sec.f)}, {"d", sec.d}, {"m", sec.m.get_str()}, {"members", sec.members}});

  Json& spectrum = doc["spectrum"];
  spectrum["stepping"] = sd.a;
  spectrum["i"] = sd.i_seq;
  spectrum["c"] = rationals(sd.c);
  spectrum["alpha"] = rationals(sd.alpha);
  spectrum["r"] = sd.r;
  spectrum["s"] = rationals(sd.s);
  spectrum["a"] = rationals(sd.a_coeff);

  Json& am = doc["a_model"];
  for (const auto& cls : a.basis)
    am["orbifold_basis"].push_back({{"f", to_string(cls.f)}, {"power", cls.power}, {"degree", to_string(cls.degree)}});
  am["C_q"] = to_json(a.C_q);
  am["C_phi"] = to_json(a.C_phi);
  am["A_inf"] = to_json(a.A_inf);
  am["pairing_1f"] = to_json(a.pairing_1f);
  am["pairing_P"] = to_json(a.pairing_P);

  Json& bm = doc["b_model"];
  bm["A0_phi"] = to_json(b.A0_phi);
  bm["A0_flat"] = to_json(a0_flat_expected(wd, sd));
  bm["A0_orb"] = to_json(a0_orb_expected(wd, sd));
  bm["S_B"] = to_json(b.S_B);
  bm["pairing_orb"] = to_json(b.pairing_orb);
  for (const auto& h : b.product_h)
    bm["h"].push_back({{"coeff", to_string(h.coeff)}, {"x_exp", h.x_exp}, {"u_exp", h.u_exp}});
  for (std::size_t i = 0; i < wd.mu; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < wd.mu; ++j) {
      const ProductTerm t = jacobi_product(wd, i, j);
      row.push_back(product_entry(t.coefficient, t.index));
    }
    bm["jacobi_product"].push_back(std::move(row));
  }

  Json& lm = doc["limits"];
  lm["valuations"] = rationals(lim.valuations);
  lm["B"] = to_json(lim.B);
  lm["A0_bar"] = to_json(lim.A0_bar);
  lm["S_bar"] = to_json(lim.S_bar);
  lm["jordan_blocks"] = jordan_blocks(sd);
  lm["cup"] = cup_table(lim.cup.mult);
  lm["cup_orb"] = cup_table(lim.cup_orb.mult);

  Json& um = doc["unfolding"];
  for (const auto& c : unf.C) um["C"].push_back(to_json(c));
  um["A_tilde"] = to_json(unf.A_tilde.to_puiseux());
  um["euler"] = {{"linear", rationals(unf.euler.linear)}, {"constant", rationals(unf.euler.constant)}};
  um["potential"] = Json::array();
  for (std::size_t i = 0; i < wd.mu; ++i)
    for (std::size_t j = i; j < wd.mu; ++j)
      for (std::size_t k = j; k < wd.mu; ++k)
        if (unf.c(i, j, k) != 0) um["potential"].push_back({{"ijk", {i, j, k}}, {"c", to_string(unf.c(i, j, k))}});

  Json verdicts = Json::array();
  for (const auto& v : report.verdicts)
    verdicts.push_back(
        {{"group", v.group}, {"name", v.verdict.name}, {"passed", v.verdict.passed}, {"detail", v.verdict.detail}});
  doc["verdicts"] = std::move(verdicts);
  doc["passed"] = report.passed();
  if (options.timings) {
    timings["total"] = std::chrono::duration<double, std::milli>(Clock::now() - t_start).count();
    doc["timings_ms"] = std::move(timings);
  }
  return report;
}

std::string emit_json(const Report& report) { return report.document.dump(2) + "\n"; }

std::string emit_text(const Report& report) {
  const Json& d = report.document;
  std::ostringstream os;
  os << "P(" << format_weights(report.weights) << ")  mu=" << d["mu"].get<std::size_t>()
     << "  n=" << d["n"].get<std::size_t>() << "  w^w=" << d["w_pow_w"].get<std::string>() << "\n";
  auto seq = [&os](const char* label, const Json& list) {
    os << label;
    for (const auto& r : list) {
      const Rational q = rational_from_json(r);
      os << " " << q.get_str();
    }
    os << "\n";
  };
  seq("c     =", d["spectrum"]["c"]);
  seq("alpha =", d["spectrum"]["alpha"]);
  os << "jordan blocks =";
  for (const auto& s : d["limits"]["jordan_blocks"]) os << " " << s.get<std::size_t>();
  os << "\n\n";
  std::size_t ok = 0;
  for (const auto& v : report.verdicts) {
    ok += v.verdict.passed;
    os << (v.verdict.passed ? "PASS  " : "FAIL  ") << v.verdict.name;
    if (!v.verdict.passed) os << "  (" << v.verdict.detail << ")";
    os << "\n";
  }
  os << "\n" << ok << " of " << report.verdicts.size() << " checks passed\n";
  return os.str();
}

std::string emit_latex(const Report& report) {
  const Json& d = report.document;
  std::ostringstream os;
  os << "% P(" << format_weights(report.weights) << ")\n";
  os << "\\[ C(q) = " << latex_matrix(d["a_model"]["C_q"], "q") << " \\]\n\n";
  os << "\\[ A_0^{\\varphi}(x) = " << latex_matrix(d["b_model"]["A0_phi"], "x") << " \\]\n\n";
  os << "\\[ A_0^{\\mathrm{orb}}(x) = " << latex_matrix(d["b_model"]["A0_orb"], "x") << " \\]\n\n";
  os << "% Jacobi product\n" << latex_table(d["b_model"]["jacobi_product"], "x") << "\n\n";
  os << "% orbifold cup product, basis 1_f P^j in c-sequence order\n" << latex_table(d["limits"]["cup_orb"], "x") << "\n\n";
  os << "% limit cup product\n" << latex_table(d["limits"]["cup"], "x") << "\n\n";
  os << "\\begin{tabular}{ll}\n";
  for (const auto& v : report.verdicts) {
    std::string name = v.verdict.name;
    std::string escaped;
    for (char ch : name) escaped += ch == '_' ? std::string("\\_") : std::string(1, ch);
    os << "  \\texttt{" << escaped << "} & " << (v.verdict.passed ? "pass" : "fail") << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

std::vector<std::vector<std::int64_t>> enumerate_weights(std::size_t mu_max) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> current{1};
  // Extend non-decreasing tails w_1 <= w_2 <= ... while the sum stays <= mu_max.
  auto extend = [&](auto&& self, std::int64_t min_w, std::size_t sum) -> void {
    for (std::int64_t w = min_w; sum + static_cast<std::size_t>(w) <= mu_max; ++w) {
      current.push_back(w);
      out.push_back(current);
      self(self, w, sum + static_cast<std::size_t>(w));
      current.pop_back();
    }
  };
  extend(extend, 1, 1);
  std::sort(out.begin(), out.end());
  return out;
}

SweepReport run_sweep(std::size_t mu_max, const ReportOptions& options, unsigned threads) {
  if (mu_max < 2) throw InputError("sweep bound must be at least 2 (got " + std::to_string(mu_max) + ")");
  if (mu_max > kMaxMu) throw InputError("sweep bound exceeds the supported maximum " + std::to_string(kMaxMu));
  const auto tuples = enumerate_weights(mu_max);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tuples.size()));

  ReportOptions inner = options;
  inner.timings = false;
  std::vector<std::vector<SweepFailure>> failures(tuples.size());
  std::vector<std::size_t> checks(tuples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tuples.size(); k = next++) {
      try {
        const Report r = run_report(tuples[k], inner);
        checks[k] = r.verdicts.size();
        for (const auto& v : r.verdicts)
          if (!v.verdict.passed) failures[k].push_back({tuples[k], v.verdict.name, v.verdict.detail});
      } catch (const std::exception& e) {
        failures[k].push_back({tuples[k], "exception", e.what()});
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  SweepReport out;
  out.mu_max = mu_max;
  out.tuples = tuples.size();
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    out.checks += checks[k];
    out.failures.insert(out.failures.end(), failures[k].begin(), failures[k].end());
  }
  return out;
}

std::string emit_json(const SweepReport& sweep) {
  Json doc;
  doc["mu_max"] = sweep.mu_max;
  doc["tuples"] = sweep.tuples;
  doc["checks"] = sweep.checks;
  doc["passed"] = sweep.passed();
  doc["failures"] = Json::array();
  for (const auto& f : sweep.failures)
    doc["failures"].push_back({{"weights", f.weights}, {"name", f.name}, {"detail", f.detail}});
  return doc.dump(2) + "\n";
}

std::string emit_text(const SweepReport& sweep) {
  std::ostringstream os;
  os << "sweep mu <= " << sweep.mu_max << ": " << sweep.tuples << " weight vectors, " << sweep.checks << " checks, "
     << sweep.failures.size() << " failures\n";
  for (const auto& f : sweep.failures)
    os << "FAIL  (" << format_weights(f.weights) << ")  " << f.name << "  (" << f.detail << ")\n";
  return os.str();
}

}  // namespace wproj
