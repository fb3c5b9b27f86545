#pragma once

// Finite Q-linear combinations of monomials x_0^{r_0} ... x_k^{r_k} theta^s
// with rational x-exponents and integer theta-exponent, and square matrices
// over that ring. Variable 0 is "the" parameter (q on the A-side, x on the
// B-side); further variables only appear in the unfolded connection.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wproj/rational.hpp"

namespace wproj {

/// Exponent of a monomial. Trailing zero x-exponents are trimmed, so two
/// equal monomials always have equal representations.
struct Exponent {
  std::vector<Rational> x;
  int theta = 0;

  Exponent() = default;
  Exponent(std::vector<Rational> xs, int th);

  static Exponent of_x(const Rational& r, int theta = 0, std::size_t var = 0);

  const Rational& x_exp(std::size_t var) const;
  bool is_zero() const { return x.empty() && theta == 0; }

  friend Exponent operator+(const Exponent& a, const Exponent& b);
  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.theta == b.theta && a.x == b.x;
  }
  friend bool operator<(const Exponent& a, const Exponent& b);

 private:
  void trim();
};

class Puiseux {
 public:
  using Terms = std::map<Exponent, Rational>;

  Puiseux() = default;
  Puiseux(const Rational& c);  // NOLINT: constants convert implicitly
  Puiseux(long c) : Puiseux(Rational(c)) {}  // NOLINT

  static Puiseux monomial(const Rational& coeff, Exponent e);
  /// coeff * x_var^r * theta^s
  static Puiseux x_power(const Rational& coeff, const Rational& r, int theta = 0,
                         std::size_t var = 0);
  static Puiseux theta_power(int s, const Rational& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant in every variable and in theta.
  bool is_constant() const;
  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const { return coefficient(Exponent{}); }
  /// theta-degree shared by every term, if any (zero has none).
  std::optional<int> uniform_theta_degree() const;

  Puiseux& operator+=(const Puiseux& o);
  Puiseux& operator-=(const Puiseux& o);
  Puiseux& operator*=(const Rational& c);
  friend Puiseux operator+(Puiseux a, const Puiseux& b) { return a += b; }
  friend Puiseux operator-(Puiseux a, const Puiseux& b) { return a -= b; }
  friend Puiseux operator*(const Puiseux& a, const Puiseux& b);
  friend Puiseux operator*(Puiseux a, const Rational& c) { return a *= c; }
  friend Puiseux operator*(const Rational& c, Puiseux a) { return a *= c; }
  Puiseux operator-() const;
  friend bool operator==(const Puiseux& a, const Puiseux& b) { return a.terms_ == b.terms_; }

  /// Multiplicative inverse of a single monomial; throws otherwise.
  Puiseux inverse() const;

  /// x_v d/dx_v: x^r -> r x^r.
  Puiseux log_derivative(std::size_t var) const;
  /// d/dx_v: x^r -> r x^{r-1}.
  Puiseux derivative(std::size_t var) const;
  /// theta d/dtheta.
  Puiseux theta_log_derivative() const;
  /// theta -> -theta.
  Puiseux theta_flip() const;
  /// Sets x_var = 0. Throws std::domain_error on a negative exponent in x_var.
  Puiseux at_zero(std::size_t var = 0) const;
  /// Sets x_var = 1 (collapses the x_var-grading).
  Puiseux at_one(std::size_t var = 0) const;

  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  Terms terms_;
};

/// Dense square matrix over Puiseux. Convention: columns are images,
/// i.e. a connection matrix Omega means nabla e_j = sum_i Omega(i,j) e_i.
class PuiseuxMatrix {
 public:
  PuiseuxMatrix() = default;
  explicit PuiseuxMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static PuiseuxMatrix identity(std::size_t n);
  static PuiseuxMatrix diagonal(const std::vector<Puiseux>& d);

  std::size_t size() const { return n_; }
  Puiseux& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Puiseux& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  PuiseuxMatrix& operator+=(const PuiseuxMatrix& o);
  PuiseuxMatrix& operator-=(const PuiseuxMatrix& o);
  friend PuiseuxMatrix operator+(PuiseuxMatrix a, const PuiseuxMatrix& b) { return a += b; }
  friend PuiseuxMatrix operator-(PuiseuxMatrix a, const PuiseuxMatrix& b) { return a -= b; }
  friend PuiseuxMatrix operator*(const PuiseuxMatrix& a, const PuiseuxMatrix& b);
  friend PuiseuxMatrix operator*(const Puiseux& c, const PuiseuxMatrix& a);
  friend PuiseuxMatrix operator*(const PuiseuxMatrix& a, const Puiseux& c) { return c * a; }
  PuiseuxMatrix operator-() const;
  friend bool operator==(const PuiseuxMatrix& a, const PuiseuxMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

  PuiseuxMatrix transpose() const;
  bool is_zero() const;
  /// Row-major first nonzero entry.
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

  template <class F>
  PuiseuxMatrix map(F&& f) const {
    PuiseuxMatrix out(n_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = f(data_[k]);
    return out;
  }

  PuiseuxMatrix log_derivative(std::size_t var) const;
  PuiseuxMatrix derivative(std::size_t var) const;
  PuiseuxMatrix theta_log_derivative() const;
  PuiseuxMatrix theta_flip() const;
  PuiseuxMatrix at_zero(std::size_t var = 0) const;

  /// Exact determinant by row expansion over column subsets (O(2^n n)).
  Puiseux determinant() const;

 private:
  std::size_t n_ = 0;
  std::vector<Puiseux> data_;
};

inline PuiseuxMatrix commutator(const PuiseuxMatrix& a, const PuiseuxMatrix& b) {
  return a * b - b * a;
}

}  // namespace wproj
