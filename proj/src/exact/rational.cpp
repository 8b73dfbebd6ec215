#include "golden/exact/rational.hpp"

#include <cctype>
#include <ostream>

#include "golden/exact/errors.hpp"

namespace golden::exact {

namespace {

mpz_class from_int64(std::int64_t v) {
  // mpz_class has no portable int64 constructor on every platform.
  return mpz_class(std::to_string(v));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw ArithmeticError(ArithmeticErrorKind::MalformedNumber,
                        "malformed rational literal '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(std::int64_t n) : q_(from_int64(n)) {}

Rational::Rational(std::int64_t n, std::int64_t d) : Rational(from_int64(n), from_int64(d)) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw ArithmeticError(ArithmeticErrorKind::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational out;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    out = Rational(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) malformed(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    out = Rational(mpz_class(std::string(whole) + std::string(frac), 10), scale);
  } else {
    if (!all_digits(body)) malformed(text);
    out = Rational(mpz_class(std::string(body), 10), mpz_class(1));
  }
  return negative ? -out : out;
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw ArithmeticError(ArithmeticErrorKind::DivisionByZero, "reciprocal of zero");
  return Rational(mpq_class(1 / q_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw ArithmeticError(ArithmeticErrorKind::DivisionByZero, "rational division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace golden::exact
