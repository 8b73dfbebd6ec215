#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

#include "golden/exact/rational.hpp"

namespace golden::exact {

/// A dyadic rational m * 2^e, normalized so that m is odd (or zero with e = 0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(mpz_class mantissa, long exponent);
  explicit Dyadic(long value) : Dyadic(mpz_class(value), 0) {}

  const mpz_class& mantissa() const { return m_; }
  long exponent() const { return e_; }

  int sign() const { return sgn(m_); }
  Rational to_rational() const;
  double to_double() const;
  std::string to_string() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic operator-() const { return Dyadic(mpz_class(-m_), e_); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.m_ == b.m_ && a.e_ == b.e_; }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// Rounding onto the grid 2^-bits.
  Dyadic floor_to(long bits) const;
  Dyadic ceil_to(long bits) const;

  static Dyadic floor_of(const Rational& q, long bits);
  static Dyadic ceil_of(const Rational& q, long bits);
  static Dyadic floor_quotient(const Dyadic& a, const Dyadic& b, long bits);
  static Dyadic ceil_quotient(const Dyadic& a, const Dyadic& b, long bits);
  /// Requires a >= 0.
  static Dyadic floor_sqrt(const Dyadic& a, long bits);
  static Dyadic ceil_sqrt(const Dyadic& a, long bits);

  /// 2^k for any integer k.
  static Dyadic power_of_two(long k) { return Dyadic(mpz_class(1), k); }

 private:
  void normalize();

  mpz_class m_{0};
  long e_ = 0;
};

inline const Dyadic& min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
inline const Dyadic& max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

}  // namespace golden::exact
