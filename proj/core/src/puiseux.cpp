#include "wproj/puiseux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wproj {

namespace {
const Rational kZero(0);
}

Exponent::Exponent(std::vector<Rational> xs, int th) : x(std::move(xs)), theta(th) { trim(); }

Exponent Exponent::of_x(const Rational& r, int theta, std::size_t var) {
  std::vector<Rational> xs(var + 1);
  xs[var] = r;
  return Exponent(std::move(xs), theta);
}

const Rational& Exponent::x_exp(std::size_t var) const {
  return var < x.size() ? x[var] : kZero;
}

void Exponent::trim() {
  while (!x.empty() && x.back() == 0) x.pop_back();
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent out;
  out.theta = a.theta + b.theta;
  out.x.resize(std::max(a.x.size(), b.x.size()));
  for (std::size_t v = 0; v < out.x.size(); ++v) out.x[v] = a.x_exp(v) + b.x_exp(v);
  out.trim();
  return out;
}

bool operator<(const Exponent& a, const Exponent& b) {
  if (a.theta != b.theta) return a.theta < b.theta;
  const std::size_t len = std::max(a.x.size(), b.x.size());
  for (std::size_t v = 0; v < len; ++v) {
    const int c = cmp(a.x_exp(v), b.x_exp(v));
    if (c != 0) return c < 0;
  }
  return false;
}

// --- Puiseux -----------------------------------------------------------------

Puiseux::Puiseux(const Rational& c) {
  if (c != 0) terms_.emplace(Exponent{}, c);
}

Puiseux Puiseux::monomial(const Rational& coeff, Exponent e) {
  Puiseux p;
  p.add_term(e, coeff);
  return p;
}

Puiseux Puiseux::x_power(const Rational& coeff, const Rational& r, int theta, std::size_t var) {
  return monomial(coeff, Exponent::of_x(r, theta, var));
}

Puiseux Puiseux::theta_power(int s, const Rational& coeff) {
  return monomial(coeff, Exponent({}, s));
}

void Puiseux::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Puiseux::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rational Puiseux::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Puiseux::uniform_theta_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int s = terms_.begin()->first.theta;
  for (const auto& [e, c] : terms_)
    if (e.theta != s) return std::nullopt;
  return s;
}

Puiseux& Puiseux::operator+=(const Puiseux& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Puiseux& Puiseux::operator-=(const Puiseux& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Puiseux& Puiseux::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Puiseux operator*(const Puiseux& a, const Puiseux& b) {
  Puiseux out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, Rational(ca * cb));
  return out;
}

Puiseux Puiseux::operator-() const {
  Puiseux out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Puiseux Puiseux::inverse() const {
  if (!is_monomial()) throw std::domain_error("inverse of a non-monomial: " + to_string());
  const auto& [e, c] = *terms_.begin();
  std::vector<Rational> xs(e.x.size());
  for (std::size_t v = 0; v < xs.size(); ++v) xs[v] = -e.x[v];
  return monomial(Rational(1 / c), Exponent(std::move(xs), -e.theta));
}

Puiseux Puiseux::log_derivative(std::size_t var) const {
  Puiseux out;
  for (const auto& [e, c] : terms_) out.add_term(e, Rational(c * e.x_exp(var)));
  return out;
}

Puiseux Puiseux::derivative(std::size_t var) const {
  Puiseux out;
  for (const auto& [e, c] : terms_) {
    const Rational& r = e.x_exp(var);
    if (r == 0) continue;
    std::vector<Rational> xs = e.x;
    xs.resize(std::max(xs.size(), var + 1));
    xs[var] -= 1;
    out.add_term(Exponent(std::move(xs), e.theta), Rational(c * r));
  }
  return out;
}

Puiseux Puiseux::theta_log_derivative() const {
  Puiseux out;
  for (const auto& [e, c] : terms_) out.add_term(e, Rational(c * e.theta));
  return out;
}

Puiseux Puiseux::theta_flip() const {
  Puiseux out = *this;
  for (auto& [e, c] : out.terms_)
    if (e.theta % 2 != 0) c = -c;
  return out;
}

Puiseux Puiseux::at_zero(std::size_t var) const {
  Puiseux out;
  for (const auto& [e, c] : terms_) {
    const int sign = sgn(e.x_exp(var));
    if (sign < 0)
      throw std::domain_error("evaluation at x=0 of a term with negative exponent: " + to_string());
    if (sign == 0) out.add_term(e, c);
  }
  return out;
}

Puiseux Puiseux::at_one(std::size_t var) const {
  Puiseux out;
  for (const auto& [e, c] : terms_) {
    std::vector<Rational> xs = e.x;
    if (var < xs.size()) xs[var] = 0;
    out.add_term(Exponent(std::move(xs), e.theta), c);
  }
  return out;
}

std::string Puiseux::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    const Rational mag = abs(c);
    if (mag != 1 || e.is_zero()) factors.push_back(mag.get_str());
    for (std::size_t v = 0; v < e.x.size(); ++v) {
      if (e.x[v] == 0) continue;
      std::string f = "x" + std::to_string(v);
      if (e.x[v] != 1) f += "^(" + e.x[v].get_str() + ")";
      factors.push_back(std::move(f));
    }
    if (e.theta != 0)
      factors.push_back(e.theta == 1 ? std::string("t") : "t^(" + std::to_string(e.theta) + ")");
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

// --- PuiseuxMatrix -----------------------------------------------------------

PuiseuxMatrix PuiseuxMatrix::identity(std::size_t n) {
  PuiseuxMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Puiseux(1);
  return m;
}

PuiseuxMatrix PuiseuxMatrix::diagonal(const std::vector<Puiseux>& d) {
  PuiseuxMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

PuiseuxMatrix& PuiseuxMatrix::operator+=(const PuiseuxMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

PuiseuxMatrix& PuiseuxMatrix::operator-=(const PuiseuxMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

PuiseuxMatrix operator*(const PuiseuxMatrix& a, const PuiseuxMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  const std::size_t n = a.n_;
  PuiseuxMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Puiseux& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Puiseux& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  return out;
}

PuiseuxMatrix operator*(const Puiseux& c, const PuiseuxMatrix& a) {
  return a.map([&c](const Puiseux& e) { return c * e; });
}

PuiseuxMatrix PuiseuxMatrix::operator-() const {
  return map([](const Puiseux& e) { return -e; });
}

PuiseuxMatrix PuiseuxMatrix::transpose() const {
  PuiseuxMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool PuiseuxMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Puiseux& e) { return e.is_zero(); });
}

std::optional<std::pair<std::size_t, std::size_t>> PuiseuxMatrix::first_nonzero() const {
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!data_[k].is_zero()) return std::make_pair(k / n_, k % n_);
  return std::nullopt;
}

PuiseuxMatrix PuiseuxMatrix::log_derivative(std::size_t var) const {
  return map([var](const Puiseux& e) { return e.log_derivative(var); });
}

PuiseuxMatrix PuiseuxMatrix::derivative(std::size_t var) const {
  return map([var](const Puiseux& e) { return e.derivative(var); });
}

PuiseuxMatrix PuiseuxMatrix::theta_log_derivative() const {
  return map([](const Puiseux& e) { return e.theta_log_derivative(); });
}

PuiseuxMatrix PuiseuxMatrix::theta_flip() const {
  return map([](const Puiseux& e) { return e.theta_flip(); });
}

PuiseuxMatrix PuiseuxMatrix::at_zero(std::size_t var) const {
  return map([var](const Puiseux& e) { return e.at_zero(var); });
}

Puiseux PuiseuxMatrix::determinant() const {
  if (n_ == 0) return Puiseux(1);
  if (n_ > 24) throw std::length_error("determinant: matrix too large for subset expansion");
  // partial[mask]: signed sum over injections of the first popcount(mask)
  // rows onto the column set mask.
  std::vector<Puiseux> partial(std::size_t{1} << n_);
  partial[0] = Puiseux(1);
  for (std::size_t mask = 0; mask < partial.size(); ++mask) {
    if (partial[mask].is_zero()) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n_) continue;
    for (std::size_t col = 0; col < n_; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      const Puiseux& entry = (*this)(row, col);
      if (entry.is_zero()) continue;
      // Sign: number of already used columns to the right of col.
      const auto above = static_cast<int>(__builtin_popcountll(mask >> (col + 1)));
      Puiseux term = partial[mask] * entry;
      if (above % 2) term = -term;
      partial[mask | (std::size_t{1} << col)] += term;
    }
  }
  return partial.back();
}

}  // namespace wproj
