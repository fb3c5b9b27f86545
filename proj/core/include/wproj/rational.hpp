#pragma once

// Arbitrary-precision rationals (GMP) and the few helpers every module needs.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wproj {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown for violated input contracts (bad weights, malformed documents).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

/// {r} = r - floor(r), always in [0, 1).
inline Rational fractional_part(const Rational& r) { return r - Rational(floor_of(r)); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

/// base^e for signed e.
inline Rational rpow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("zero to a negative power");
    return Rational(0);
  }
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational out(ipow(base.get_num(), k), ipow(base.get_den(), k));
  out.canonicalize();
  if (e < 0) out = 1 / out;
  return out;
}

/// Always "num/den", integers included ("3/1").
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p/q" or "p"; rejects zero denominators and junk.
inline Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw InputError("empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0) throw InputError("malformed rational '" + s + "'");
  if (r.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace wproj
