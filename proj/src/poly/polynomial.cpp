#include "golden/poly/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace golden::poly {

RationalPolynomial::RationalPolynomial(std::vector<Rational> lowest_first) : c_(std::move(lowest_first)) { trim(); }

RationalPolynomial RationalPolynomial::from_highest_first(std::span<const Rational> coefficients) {
  return RationalPolynomial(std::vector<Rational>(coefficients.rbegin(), coefficients.rend()));
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::linear_root(const Rational& r) { return RationalPolynomial({-r, Rational(1)}); }

void RationalPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational RationalPolynomial::eval(const Rational& x) const {
  Rational r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Real RationalPolynomial::eval(const Real& x) const {
  Real r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Real(*it);
  return r;
}

RationalPolynomial RationalPolynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<std::int64_t>(i)));
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return *this;
  return leading().reciprocal() * *this;
}

RationalPolynomial RationalPolynomial::operator-() const { return Rational(-1) * *this; }

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) { return a + (-b); }

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p) {
  std::vector<Rational> out = p.c_;
  for (auto& c : out) c *= s;
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out << "-";
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (!unit || k == 0) out << (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")");
    if (k >= 1) out << var;
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

RationalPolynomial multiply(const RationalPolynomial& p, const RationalPolynomial& q) { return p * q; }

RationalPolynomial derivative(const RationalPolynomial& p) { return p.derivative(); }

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& p, const RationalPolynomial& d) {
  if (d.is_zero()) throw PolynomialError(PolynomialErrorKind::ZeroPolynomial, "polynomial division by zero");
  std::vector<Rational> rem = p.coefficients();
  const int dd = d.degree();
  if (p.degree() < dd) return {RationalPolynomial(), p};
  std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - dd + 1));
  const Rational lead_inv = d.leading().reciprocal();
  for (int k = p.degree(); k >= dd; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] * lead_inv;
    quot[static_cast<std::size_t>(k - dd)] = factor;
    if (factor.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= factor * d.coefficient(static_cast<std::size_t>(j));
    }
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(const RationalPolynomial& p, const RationalPolynomial& q) {
  RationalPolynomial a = p;
  RationalPolynomial b = q;
  while (!b.is_zero()) {
    RationalPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

RationalPolynomial square_free_part(const RationalPolynomial& p) {
  if (p.degree() <= 0) return p.monic();
  const RationalPolynomial g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  RationalPolynomial next = p.derivative();
  while (!next.is_zero()) {
    // Positive rescaling keeps every sign intact.
    chain.push_back(next.leading().abs().reciprocal() * next);
    next = -divmod(chain[chain.size() - 2], chain.back()).second;
  }
  return chain;
}

int sign_variations(std::span<const RationalPolynomial> chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_roots(std::span<const RationalPolynomial> chain, const Rational& lo, const Rational& hi) {
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

Rational cauchy_root_bound(const RationalPolynomial& p) {
  Rational m;
  const Rational lead = p.leading().abs();
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, p.coefficient(static_cast<std::size_t>(i)).abs() / lead);
  return m + Rational(1);
}

namespace {

// A point strictly inside (lo, hi) where p does not vanish.
Rational split_point(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
  for (std::int64_t k = 2;; ++k) {
    // 1/2, then 1/3, 2/3, 1/4, ... of the way across.
    for (std::int64_t j = 1; j < k; ++j) {
      const Rational m = lo + (hi - lo) * Rational(j, k);
      if (p.sign_at(m) != 0) return m;
    }
  }
}

void isolate(const RationalPolynomial& sqf, std::span<const RationalPolynomial> chain, const Rational& lo,
             const Rational& hi, int count, std::vector<IsolatingInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi, false});
    return;
  }
  const Rational m = split_point(sqf, lo, hi);
  const int left = count_roots(chain, lo, m);
  isolate(sqf, chain, lo, m, left, out);
  isolate(sqf, chain, m, hi, count - left, out);
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = ::abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0) {
      n /= d;
      ++e;
    }
    if (e > 0) factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1U);
  std::vector<mpz_class> divisors{1};
  for (const auto& [prime, exp] : factors) {
    const std::size_t base = divisors.size();
    mpz_class power = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  return divisors;
}

}  // namespace

RootIsolation isolate_real_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw PolynomialError(PolynomialErrorKind::ZeroPolynomial, "cannot isolate roots of the zero polynomial");
  RootIsolation result;
  const RationalPolynomial sqf = square_free_part(p);
  result.multiplicity_free = sqf.degree() == p.degree();
  if (sqf.degree() <= 0) return result;
  const auto chain = sturm_sequence(sqf);
  const Rational bound = cauchy_root_bound(sqf);
  isolate(sqf, chain, -bound, bound, count_roots(chain, -bound, bound), result.intervals);
  return result;
}

IsolatingInterval refine_root(const RationalPolynomial& sqf, IsolatingInterval interval, const Rational& width) {
  if (interval.exact) return interval;
  const int lo_sign = sqf.sign_at(interval.lo);
  while (interval.hi - interval.lo > width) {
    const Rational m = (interval.lo + interval.hi) * Rational(1, 2);
    const int s = sqf.sign_at(m);
    if (s == 0) return {m, m, true};
    if (s == lo_sign) {
      interval.lo = m;
    } else {
      interval.hi = m;
    }
  }
  return interval;
}

std::vector<Rational> rational_roots(const RationalPolynomial& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  // Integer coefficients with the same roots.
  mpz_class lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p.coefficients()) ints.push_back(c.numerator() * (lcm / c.denominator()));
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  const RationalPolynomial reduced(std::vector<Rational>(p.coefficients().begin() + static_cast<std::ptrdiff_t>(low),
                                                         p.coefficients().end()));
  if (reduced.degree() >= 1) {
    for (const auto& num : positive_divisors(ints[low])) {
      for (const auto& den : positive_divisors(ints.back())) {
        for (int s : {-1, 1}) {
          const Rational cand(num * s, den);
          if (reduced.sign_at(cand) == 0) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<Real> solve_biquadratic(const RationalPolynomial& p) {
  if (p.degree() != 4 || !p.coefficient(1).is_zero() || !p.coefficient(3).is_zero()) {
    throw PolynomialError(PolynomialErrorKind::NotBiquadratic, "expected A a^4 + B a^2 + C with A != 0, got " + p.to_string("a"));
  }
  const Rational a = p.coefficient(4);
  const Rational b = p.coefficient(2);
  const Rational c = p.coefficient(0);
  const Rational disc = b * b - Rational(4) * a * c;
  std::vector<Real> out;
  if (disc.sign() < 0) return out;
  const Real root_disc = sqrt(Real(disc));
  std::vector<Real> squares{(Real(-b) + root_disc) / Real(Rational(2) * a)};
  if (disc.sign() > 0) squares.push_back((Real(-b) - root_disc) / Real(Rational(2) * a));
  for (const Real& t : squares) {
    const int s = t.sign();
    if (s > 0) {
      const Real r = sqrt(t);
      out.push_back(-r);
      out.push_back(r);
    } else if (s == 0) {
      out.emplace_back(0);
    }
  }
  std::sort(out.begin(), out.end(), [](const Real& x, const Real& y) { return less_than(x, y); });
  out.erase(std::unique(out.begin(), out.end(), [](const Real& x, const Real& y) { return equals(x, y); }), out.end());
  return out;
}

}  // namespace golden::poly
