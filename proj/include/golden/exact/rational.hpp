#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace golden::exact {

/// Arbitrary-precision rational in canonical form: positive denominator,
/// numerator and denominator coprime, zero stored as 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(mpq_class q);

  /// Accepts "7", "-3/2", "1.25" (finite decimals only).
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Integer power, exponent >= 0.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace golden::exact
