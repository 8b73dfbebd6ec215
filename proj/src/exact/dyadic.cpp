#include "golden/exact/dyadic.hpp"

#include <cmath>

#include "golden/exact/errors.hpp"

namespace golden::exact {

namespace {

// v * 2^shift for shift of either sign, rounding toward -inf when shift < 0.
mpz_class shift_floor(const mpz_class& v, long shift) {
  mpz_class r;
  if (shift >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    mpz_fdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  return r;
}

mpz_class shift_ceil(const mpz_class& v, long shift) {
  mpz_class r;
  if (shift >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    mpz_cdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  return r;
}

// Brings a/b to a common integer ratio num/den with value a/b * 2^bits.
void quotient_terms(const Dyadic& a, const Dyadic& b, long bits, mpz_class& num, mpz_class& den) {
  if (b.sign() == 0) throw ArithmeticError(ArithmeticErrorKind::DivisionByZero, "dyadic division by zero");
  const long s = a.exponent() - b.exponent() + bits;
  if (s >= 0) {
    num = shift_floor(a.mantissa(), s);
    den = b.mantissa();
  } else {
    num = a.mantissa();
    den = shift_floor(b.mantissa(), -s);
  }
}

}  // namespace

Dyadic::Dyadic(mpz_class mantissa, long exponent) : m_(std::move(mantissa)), e_(exponent) { normalize(); }

void Dyadic::normalize() {
  if (m_ == 0) {
    e_ = 0;
    return;
  }
  const mp_bitcnt_t tz = mpz_scan1(m_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(m_.get_mpz_t(), m_.get_mpz_t(), tz);
    e_ += static_cast<long>(tz);
  }
}

Rational Dyadic::to_rational() const {
  if (e_ >= 0) return Rational(shift_floor(m_, e_), mpz_class(1));
  mpz_class den;
  mpz_setbit(den.get_mpz_t(), static_cast<mp_bitcnt_t>(-e_));
  return Rational(m_, den);
}

double Dyadic::to_double() const {
  long exp = 0;
  const double d = mpz_get_d_2exp(&exp, m_.get_mpz_t());
  return std::ldexp(d, static_cast<int>(exp + e_));
}

std::string Dyadic::to_string() const { return m_.get_str() + "*2^" + std::to_string(e_); }

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.sign() == 0) return b;
  if (b.sign() == 0) return a;
  const long e = std::min(a.e_, b.e_);
  return Dyadic(shift_floor(a.m_, a.e_ - e) + shift_floor(b.m_, b.e_ - e), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) { return Dyadic(a.m_ * b.m_, a.e_ + b.e_); }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  const long e = std::min(a.e_, b.e_);
  const int c = cmp(shift_floor(a.m_, a.e_ - e), shift_floor(b.m_, b.e_ - e));
  return c <=> 0;
}

Dyadic Dyadic::floor_to(long bits) const {
  if (e_ >= -bits) return *this;
  return Dyadic(shift_floor(m_, e_ + bits), -bits);
}

Dyadic Dyadic::ceil_to(long bits) const {
  if (e_ >= -bits) return *this;
  return Dyadic(shift_ceil(m_, e_ + bits), -bits);
}

Dyadic Dyadic::floor_of(const Rational& q, long bits) {
  mpz_class num = q.numerator();
  mpz_class den = q.denominator();
  if (bits >= 0) {
    num = shift_floor(num, bits);
  } else {
    den = shift_floor(den, -bits);
  }
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Dyadic(r, -bits);
}

Dyadic Dyadic::ceil_of(const Rational& q, long bits) {
  mpz_class num = q.numerator();
  mpz_class den = q.denominator();
  if (bits >= 0) {
    num = shift_floor(num, bits);
  } else {
    den = shift_floor(den, -bits);
  }
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Dyadic(r, -bits);
}

Dyadic Dyadic::floor_quotient(const Dyadic& a, const Dyadic& b, long bits) {
  mpz_class num;
  mpz_class den;
  quotient_terms(a, b, bits, num, den);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Dyadic(r, -bits);
}

Dyadic Dyadic::ceil_quotient(const Dyadic& a, const Dyadic& b, long bits) {
  mpz_class num;
  mpz_class den;
  quotient_terms(a, b, bits, num, den);
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Dyadic(r, -bits);
}

Dyadic Dyadic::floor_sqrt(const Dyadic& a, long bits) {
  if (a.sign() < 0) throw ArithmeticError(ArithmeticErrorKind::NegativeRadicand, "dyadic sqrt of negative");
  const mpz_class scaled = shift_floor(a.m_, a.e_ + 2 * bits);
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
  return Dyadic(r, -bits);
}

Dyadic Dyadic::ceil_sqrt(const Dyadic& a, long bits) {
  if (a.sign() < 0) throw ArithmeticError(ArithmeticErrorKind::NegativeRadicand, "dyadic sqrt of negative");
  const mpz_class scaled = shift_ceil(a.m_, a.e_ + 2 * bits);
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
  if (r * r < scaled) r += 1;
  return Dyadic(r, -bits);
}

}  // namespace golden::exact
