#include "wproj/linear_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace wproj {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const RationalVector& d) {
  RationalMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RationalMatrix RationalMatrix::from_constant(const PuiseuxMatrix& m) {
  RationalMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (!m(i, j).is_constant())
        throw std::domain_error("entry is not constant: " + m(i, j).to_string());
      out(i, j) = m(i, j).constant_term();
    }
  return out;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  const std::size_t n = a.n_;
  RationalMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RationalMatrix operator*(const Rational& c, RationalMatrix a) {
  for (auto& e : a.data_) e *= c;
  return a;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
  if (v.size() != a.n_) throw std::invalid_argument("vector size mismatch");
  RationalVector out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j)
      if (a(i, j) != 0 && v[j] != 0) out[i] += a(i, j) * v[j];
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RationalMatrix RationalMatrix::power(unsigned k) const {
  RationalMatrix out = identity(n_);
  for (unsigned p = 0; p < k; ++p) out = out * *this;
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& e) { return e == 0; });
}

std::optional<std::pair<std::size_t, std::size_t>> RationalMatrix::first_nonzero() const {
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (data_[k] != 0) return std::make_pair(k / n_, k % n_);
  return std::nullopt;
}

RationalVector RationalMatrix::column(std::size_t j) const {
  RationalVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)(i, j);
  return out;
}

PuiseuxMatrix RationalMatrix::to_puiseux() const {
  PuiseuxMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = Puiseux((*this)(i, j));
  return out;
}

namespace {

// Row-reduces `rows` in place; returns the rank and accumulates the
// determinant sign/product when `det` is non-null (square input only).
std::size_t eliminate(std::vector<RationalVector>& rows, Rational* det) {
  if (rows.empty()) {
    if (det) *det = 1;
    return 0;
  }
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();
  std::size_t rank = 0;
  Rational d = 1;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) {
      d = 0;
      continue;
    }
    if (pivot != rank) {
      std::swap(rows[pivot], rows[rank]);
      d = -d;
    }
    const Rational p = rows[rank][col];
    d *= p;
    for (std::size_t r = rank + 1; r < m; ++r) {
      if (rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / p;
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  if (det) *det = rank == m ? d : Rational(0);
  return rank;
}

}  // namespace

Rational RationalMatrix::determinant() const {
  std::vector<RationalVector> rows(n_, RationalVector(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = (*this)(i, j);
  Rational det;
  eliminate(rows, &det);
  return det;
}

std::size_t RationalMatrix::rank() const {
  std::vector<RationalVector> rows(n_, RationalVector(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = (*this)(i, j);
  return eliminate(rows, nullptr);
}

std::size_t rank_of_columns(const std::vector<RationalVector>& columns) {
  std::vector<RationalVector> rows = columns;  // rank(M) == rank(M^T)
  return eliminate(rows, nullptr);
}

std::size_t krylov_dimension(const RationalMatrix& a, const RationalVector& v) {
  std::vector<RationalVector> chain;
  RationalVector cur = v;
  for (std::size_t k = 0; k < a.size(); ++k) {
    chain.push_back(cur);
    cur = a * cur;
  }
  return rank_of_columns(chain);
}

RationalVector unit_vector(std::size_t n, std::size_t k) {
  RationalVector v(n);
  v.at(k) = 1;
  return v;
}

}  // namespace wproj
