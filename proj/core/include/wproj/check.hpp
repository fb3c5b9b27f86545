#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wproj/puiseux.hpp"

namespace wproj {

/// First entry at which an asserted matrix identity fails.
struct Mismatch {
  std::string condition;
  std::size_t row = 0;
  std::size_t col = 0;
  Puiseux residual;

  std::string describe() const;
};

/// Outcome of an exact identity check. Failures are reported, never thrown.
struct IdentityReport {
  std::optional<Mismatch> failure;

  bool passed() const { return !failure.has_value(); }
  explicit operator bool() const { return passed(); }
  std::string describe() const { return failure ? failure->describe() : "ok"; }

  static IdentityReport ok() { return {}; }
  static IdentityReport fail(std::string condition, std::size_t row, std::size_t col,
                             Puiseux residual = {}) {
    return {Mismatch{std::move(condition), row, col, std::move(residual)}};
  }
};

/// A named verdict as it appears in reports. Names are stable identifiers.
struct Verdict {
  std::string name;
  bool passed = false;
  std::string detail;
};

using VerdictList = std::vector<Verdict>;

inline Verdict make_verdict(std::string name, const IdentityReport& r) {
  return {std::move(name), r.passed(), r.describe()};
}

inline Verdict make_verdict(std::string name, bool ok, std::string detail = {}) {
  if (detail.empty()) detail = ok ? "ok" : "failed";
  return {std::move(name), ok, std::move(detail)};
}

/// Compares two matrices entrywise, reporting the first difference.
IdentityReport compare_matrices(const PuiseuxMatrix& lhs, const PuiseuxMatrix& rhs,
                                const std::string& condition);

}  // namespace wproj
