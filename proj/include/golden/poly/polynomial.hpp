#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "golden/exact/constructible.hpp"
#include "golden/exact/rational.hpp"

namespace golden::poly {

using exact::Rational;
using exact::Real;

enum class PolynomialErrorKind { ZeroPolynomial, NotBiquadratic };

class PolynomialError : public std::invalid_argument {
 public:
  PolynomialError(PolynomialErrorKind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  PolynomialErrorKind kind() const noexcept { return kind_; }

 private:
  PolynomialErrorKind kind_;
};

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. The zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> lowest_first);

  static RationalPolynomial from_highest_first(std::span<const Rational> coefficients);
  static RationalPolynomial constant(const Rational& c);
  /// x - r
  static RationalPolynomial linear_root(const Rational& r);

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational coefficient(std::size_t power) const { return power < c_.size() ? c_[power] : Rational(0); }

  Rational eval(const Rational& x) const;
  Real eval(const Real& x) const;
  int sign_at(const Rational& x) const { return eval(x).sign(); }

  RationalPolynomial derivative() const;
  RationalPolynomial monic() const;
  RationalPolynomial operator-() const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// Human-readable form in the variable `var`, e.g. "a^6 - 5a^4 + 3a^2 + 1".
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

RationalPolynomial multiply(const RationalPolynomial& p, const RationalPolynomial& q);
RationalPolynomial derivative(const RationalPolynomial& p);

/// Euclidean division: p = q * d + r with deg r < deg d.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& p, const RationalPolynomial& d);
/// Monic greatest common divisor; gcd(0, 0) = 0.
RationalPolynomial gcd(const RationalPolynomial& p, const RationalPolynomial& q);
/// p / gcd(p, p'), made monic.
RationalPolynomial square_free_part(const RationalPolynomial& p);

/// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p);
/// Sign changes of the chain evaluated at x (zeros skipped).
int sign_variations(std::span<const RationalPolynomial> chain, const Rational& x);
/// Number of distinct real roots in (lo, hi].
int count_roots(std::span<const RationalPolynomial> chain, const Rational& lo, const Rational& hi);

/// Every real root lies strictly inside (-bound, bound).
Rational cauchy_root_bound(const RationalPolynomial& p);

struct IsolatingInterval {
  Rational lo;
  Rational hi;
  /// Set when the root is known exactly and lo == hi.
  bool exact = false;
};

struct RootIsolation {
  std::vector<IsolatingInterval> intervals;
  bool multiplicity_free = true;
};

/// Isolates every distinct real root with disjoint rational intervals sorted
/// ascending. Open intervals (lo, hi) have p nonzero at both endpoints and a
/// sign change of the square-free part across them. Throws PolynomialError on
/// the zero polynomial.
RootIsolation isolate_real_roots(const RationalPolynomial& p);

/// Bisects an isolating interval of the square-free part `sqf` until it is no
/// wider than `width`.
IsolatingInterval refine_root(const RationalPolynomial& sqf, IsolatingInterval interval, const Rational& width);

/// Rational roots by the rational root theorem (distinct, ascending).
std::vector<Rational> rational_roots(const RationalPolynomial& p);

/// Exact real roots of A a^4 + B a^2 + C, distinct and ascending.
/// Throws PolynomialError when p is not of that shape with A != 0.
std::vector<Real> solve_biquadratic(const RationalPolynomial& p);

}  // namespace golden::poly
