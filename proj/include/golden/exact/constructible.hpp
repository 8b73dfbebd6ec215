#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "golden/exact/dyadic.hpp"
#include "golden/exact/rational.hpp"

namespace golden::exact {

/// A closed interval [lo, hi] with dyadic endpoints that is known to contain
/// the value it was computed for, with hi - lo <= 2^-precision_bits.
struct IntervalEnclosure {
  Dyadic lo;
  Dyadic hi;
  long precision_bits = 0;

  Dyadic width() const { return hi - lo; }
  bool contains(const Rational& q) const { return lo.to_rational() <= q && q <= hi.to_rational(); }
  bool subset_of(const IntervalEnclosure& other) const { return other.lo <= lo && hi <= other.hi; }
};

enum class Op { Const, Add, Sub, Mul, Div, Sqrt };

struct Node;

/// An exact real number obtained from rationals by field operations and
/// square roots, stored as an immutable, hash-consed expression DAG.
///
/// Signs are decided exactly: the value is enclosed in dyadic intervals of
/// doubling precision until either the enclosure excludes zero or its width
/// drops below the separation bound of the expression, which certifies zero.
///
/// Division and square root check their preconditions when the node is
/// built, so every value that exists is well defined.
class ConstructibleReal {
 public:
  ConstructibleReal();
  ConstructibleReal(std::int64_t n);         // NOLINT(google-explicit-constructor)
  ConstructibleReal(int n) : ConstructibleReal(static_cast<std::int64_t>(n)) {}  // NOLINT
  ConstructibleReal(const Rational& q);      // NOLINT(google-explicit-constructor)

  friend ConstructibleReal operator+(const ConstructibleReal& a, const ConstructibleReal& b);
  friend ConstructibleReal operator-(const ConstructibleReal& a, const ConstructibleReal& b);
  friend ConstructibleReal operator*(const ConstructibleReal& a, const ConstructibleReal& b);
  /// Throws ArithmeticError(DivisionByZero) when b is exactly zero.
  friend ConstructibleReal operator/(const ConstructibleReal& a, const ConstructibleReal& b);
  ConstructibleReal operator-() const;

  ConstructibleReal& operator+=(const ConstructibleReal& o) { return *this = *this + o; }
  ConstructibleReal& operator-=(const ConstructibleReal& o) { return *this = *this - o; }
  ConstructibleReal& operator*=(const ConstructibleReal& o) { return *this = *this * o; }
  ConstructibleReal& operator/=(const ConstructibleReal& o) { return *this = *this / o; }

  /// Principal square root. Throws ArithmeticError(NegativeRadicand) when x < 0.
  friend ConstructibleReal sqrt(const ConstructibleReal& x);

  int sign(long start_bits = 64) const;

  /// Enclosure of width <= 2^-bits. Repeated calls never widen the cache.
  IntervalEnclosure refine(long bits) const;

  /// Correctly rounded decimal with `digits` fractional digits; exact ties
  /// round half to even.
  std::string to_decimal(unsigned digits) const;

  /// Nearest-ish double for rendering; not used for decisions.
  double to_double() const;

  /// Set when the value is a rational constant.
  std::optional<Rational> as_rational() const;

  Op op() const;
  /// Number of distinct square-root nodes in the DAG.
  std::size_t radical_count() const;
  /// Bits b such that a nonzero value of this expression has |x| >= 2^-b.
  double separation_bound_bits() const;
  /// Precision at which sign() decided; the result is cached on the node.
  long last_sign_precision() const;

  /// Infix rendering, with shared subexpressions expanded. Intended for small
  /// expressions only.
  std::string to_string() const;

  /// Identity of the underlying interned node.
  const void* id() const { return node_.get(); }

  friend bool operator==(const ConstructibleReal& a, const ConstructibleReal& b);
  friend std::strong_ordering operator<=>(const ConstructibleReal& a, const ConstructibleReal& b);

 private:
  friend std::string serialize(std::span<const ConstructibleReal> values);
  explicit ConstructibleReal(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

using Real = ConstructibleReal;

ConstructibleReal sqrt(const ConstructibleReal& x);

inline bool equals(const Real& a, const Real& b) { return a == b; }
inline bool less_than(const Real& a, const Real& b) { return (a <=> b) < 0; }
Real abs(const Real& x);

/// Lossless linear listing of the DAG below `values`, shared nodes written
/// once. Structurally identical inputs give byte-identical output.
std::string serialize(std::span<const Real> values);

/// (1 + sqrt(5)) / 2 and related shared constants.
const Real& phi();
const Real& sqrt_phi();
const Real& phi_sqrt_phi();
const Real& sqrt_two_phi();

}  // namespace golden::exact
