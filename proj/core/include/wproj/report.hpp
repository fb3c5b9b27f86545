#pragma once

// One-shot driver: build every package for a weight vector, run the
// verifiers and render the result. Also the sweep over all weight vectors
// up to a given mu.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wproj/check.hpp"
#include "wproj/serialize.hpp"

namespace wproj {

/// Largest supported mu (exact determinants expand over column subsets).
inline constexpr std::size_t kMaxMu = 24;

inline const std::vector<std::string>& verdict_groups() {
  static const std::vector<std::string> groups{"combinatorics", "a_model", "b_model", "mirror",
                                               "limits",        "unfolding", "log"};
  return groups;
}

struct ReportOptions {
  /// Group names or verdict-name prefixes; empty means everything.
  std::vector<std::string> verify;
  bool timings = false;
};

struct GroupedVerdict {
  std::string group;
  Verdict verdict;
};

struct Report {
  std::vector<std::int64_t> weights;
  std::vector<GroupedVerdict> verdicts;  // after filtering
  Json document;

  bool passed() const;
};

/// Throws InputError for bad weights or a --verify token matching nothing.
Report run_report(std::span<const std::int64_t> weights, const ReportOptions& options = {});

std::string emit_json(const Report& report);
std::string emit_text(const Report& report);
std::string emit_latex(const Report& report);

/// (1, w_1 <= ... <= w_n) with n >= 1 and sum <= mu_max, lexicographically sorted.
std::vector<std::vector<std::int64_t>> enumerate_weights(std::size_t mu_max);

struct SweepFailure {
  std::vector<std::int64_t> weights;
  std::string name;
  std::string detail;
};

struct SweepReport {
  std::size_t mu_max = 0;
  std::size_t tuples = 0;
  std::size_t checks = 0;
  std::vector<SweepFailure> failures;  // sorted by tuple, then report order

  bool passed() const { return failures.empty(); }
};

/// threads == 0 picks the hardware concurrency.
SweepReport run_sweep(std::size_t mu_max, const ReportOptions& options = {}, unsigned threads = 0);

std::string emit_json(const SweepReport& sweep);
std::string emit_text(const SweepReport& sweep);

std::string format_weights(std::span<const std::int64_t> weights);
/// "1,2,2" -> {1,2,2}; throws InputError.
std::vector<std::int64_t> parse_weights(const std::string& text);

}  // namespace wproj
