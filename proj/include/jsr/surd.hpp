#pragma once

#include <cstdint>
#include <string>

#include "jsr/rational.hpp"

namespace jsr {

/// Exact real number a + b*sqrt(d) with rational a, b and rational d >= 0.
///
/// Normal form: d is a square-free positive integer or 0, and b == 0 iff
/// d == 0. Two surds with the same normal form are equal as reals.
class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(Rational a);  // NOLINT: implicit from rationals is intended
  QuadSurd(Rational a, Rational b, Rational d);

  /// sqrt(q) for rational q >= 0.
  static QuadSurd sqrt_of(const Rational& q) { return QuadSurd(0, 1, q); }

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& coefficient() const noexcept { return b_; }
  const Rational& radicand() const noexcept { return d_; }
  bool is_rational() const noexcept { return sgn(b_) == 0; }

  int sign() const;

  QuadSurd operator+(const QuadSurd& o) const;
  QuadSurd operator-(const QuadSurd& o) const;
  QuadSurd operator-() const;
  /// Product; both operands must share a radicand unless one is rational.
  QuadSurd operator*(const QuadSurd& o) const;
  QuadSurd pow(std::uint64_t k) const;

  double approx() const;
  /// ln of a positive surd whose rational part and coefficient are both >= 0.
  double log() const;

  /// "(3+sqrt(13))/2", "sqrt(2)", "5/3", "-1+2*sqrt(7)".
  std::string to_string() const;

  friend bool operator==(const QuadSurd& x, const QuadSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

 private:
  void normalize();

  Rational a_ = 0;
  Rational b_ = 0;
  Rational d_ = 0;
};

/// Exact sign of x - y (-1, 0, +1), for arbitrary radicands.
int compare(const QuadSurd& x, const QuadSurd& y);

/// Exact sign of a + b*sqrt(u) + c*sqrt(v) for rationals, u, v >= 0.
int sign_of_two_surds(const Rational& a, const Rational& b, const Rational& u, const Rational& c, const Rational& v);

}  // namespace jsr
