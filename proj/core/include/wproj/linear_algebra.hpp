#pragma once

// Dense matrices over Q: rank, determinant and the Krylov computations used
// for Jordan-block and pre-primitivity analysis.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "wproj/puiseux.hpp"
#include "wproj/rational.hpp"

namespace wproj {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const RationalVector& d);
  /// Entry-wise constant terms; throws std::domain_error if an entry is not constant.
  static RationalMatrix from_constant(const PuiseuxMatrix& m);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& c, RationalMatrix a);
  friend RationalVector operator*(const RationalMatrix& a, const RationalVector& v);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

  RationalMatrix transpose() const;
  RationalMatrix power(unsigned k) const;
  bool is_zero() const;
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

  RationalVector column(std::size_t j) const;
  PuiseuxMatrix to_puiseux() const;

  Rational determinant() const;
  std::size_t rank() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

inline RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
  return a * b - b * a;
}

/// Rank of a list of vectors (as columns).
std::size_t rank_of_columns(const std::vector<RationalVector>& columns);

/// dim span(v, Av, A^2 v, ...).
std::size_t krylov_dimension(const RationalMatrix& a, const RationalVector& v);

RationalVector unit_vector(std::size_t n, std::size_t k);

}  // namespace wproj
