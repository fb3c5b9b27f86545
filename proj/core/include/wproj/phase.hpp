#pragma once

#include "wproj/rational.hpp"

namespace wproj {

/// exp(2 pi i * value), stored as value mod 1. Phases are only ever
/// multiplied, which is addition here, so no cyclotomic arithmetic is needed.
class Phase {
 public:
  Phase() = default;
  explicit Phase(const Rational& v) : value_(fractional_part(v)) {}

  const Rational& value() const { return value_; }
  bool is_trivial() const { return value_ == 0; }

  friend Phase operator+(const Phase& a, const Phase& b) { return Phase(a.value_ + b.value_); }
  friend Phase operator-(const Phase& a, const Phase& b) { return Phase(a.value_ - b.value_); }
  Phase operator-() const { return Phase(-value_); }
  friend bool operator==(const Phase& a, const Phase& b) { return a.value_ == b.value_; }

 private:
  Rational value_ = 0;
};

}  // namespace wproj
