#include "golden/conics/coupled.hpp"

#include <algorithm>
#include <cmath>

namespace golden::conics {

using poly::RationalPolynomial;

CoupledConicSystem::CoupledConicSystem(Real a) : a_(std::move(a)), c_(1) {
  if (a_.sign() <= 0 || !less_than(c_, a_)) throw std::invalid_argument("coupled system needs a > 1");
  b_ = sqrt(a_ * a_ - c_ * c_);
}

bool CoupledConicSystem::on_ellipse(const Point& p) const {
  return equals(p.x * p.x / (a_ * a_) + p.y * p.y / (b_ * b_), Real(1));
}

bool CoupledConicSystem::on_hyperbola(const Point& p) const {
  return equals(p.x * p.x / (c_ * c_) - p.y * p.y / (b_ * b_), Real(1));
}

std::pair<Real, Real> intersect_coupled(const CoupledConicSystem& sys) {
  const Real a2 = sys.a() * sys.a();
  const Real x = sqrt(Real(2) * a2 / (a2 + Real(1)));
  const Real y = sqrt((a2 - Real(1)) * sys.b() * sys.b() / (a2 + Real(1)));
  return {x, y};
}

SceneLayout scene(const CoupledConicSystem& sys) {
  const auto [x, y] = intersect_coupled(sys);
  const Real zero(0);
  SceneLayout s;
  s.O = {zero, zero};
  s.F1 = {-sys.c(), zero};
  s.F2 = {sys.c(), zero};
  s.K = {zero, sys.b()};
  s.L = {zero, -sys.b()};
  s.M = {-sys.a(), zero};
  s.N = {sys.a(), zero};
  s.P = {x, y};
  s.Q = {x, zero};
  s.H = {Real(1) / sys.a(), zero};
  return s;
}

RationalPolynomial parallel_condition_polynomial() {
  // PQ/QN = KO/OF2 reads sqrt((a^2-1) b^2 / (a^2+1)) = (a - sqrt(X)) b with
  // X = 2a^2 / (a^2+1) and b^2 = a^2 - 1.
  const RationalPolynomial one({Rational(1)});
  const RationalPolynomial a({Rational(0), Rational(1)});
  const RationalPolynomial a2 = a * a;
  const RationalPolynomial b2 = a2 - one;
  const RationalPolynomial den = a2 + one;
  // Squared and multiplied by (a^2+1):
  //   (a^2-1) b^2 = b^2 ((a^2+1) a^2 + 2a^2) - 2a (a^2+1) b^2 sqrt(X)
  // so U = V sqrt(X) with
  const RationalPolynomial U = b2 * b2 - b2 * (den * a2 + Rational(2) * a2);
  const RationalPolynomial V = Rational(-2) * (a * den * b2);
  // Drop the factor b^2 (a^2+1) shared by both sides; it is nonzero for a > 1.
  const RationalPolynomial g = poly::gcd(U, V);
  const RationalPolynomial u = poly::divmod(U, g).first;
  const RationalPolynomial v = poly::divmod(V, g).first;
  // u^2 = v^2 X, cleared of its denominator.
  return (u * u * den - Rational(2) * (v * v * a2)).monic();
}

bool verify_parallel_condition(const Real& a) {
  if (!less_than(Real(1), a)) return false;
  const CoupledConicSystem sys(a);
  const auto [x, y] = intersect_coupled(sys);
  if (!less_than(x, a)) return false;
  return equals(y, (a - x) * sys.b());
}

ProblemSolution solve_problem() {
  RationalPolynomial p = parallel_condition_polynomial();
  std::vector<Real> candidates;
  for (const Rational& r : poly::rational_roots(p)) {
    candidates.emplace_back(r);
    while (p.sign_at(r) == 0) p = poly::divmod(p, RationalPolynomial::linear_root(r)).first;
  }
  for (const Real& r : poly::solve_biquadratic(p)) candidates.push_back(r);
  std::sort(candidates.begin(), candidates.end(), [](const Real& x, const Real& y) { return less_than(x, y); });

  ProblemSolution sol;
  std::vector<Real> accepted;
  for (const Real& r : candidates) {
    if (!less_than(Real(1), r)) {
      sol.rejected.push_back({r, "rejected: a > c required"});
    } else if (!verify_parallel_condition(r)) {
      sol.rejected.push_back({r, "rejected: spurious root of the squared equation"});
    } else {
      accepted.push_back(r);
    }
  }
  if (accepted.size() != 1) throw std::logic_error("expected exactly one admissible root");

  const CoupledConicSystem sys(accepted.front());
  const SceneLayout s = scene(sys);
  sol.a = sys.a();
  sol.e1 = sys.e1();
  sol.e2 = sys.e2();
  sol.x_P = s.P.x;
  sol.y_P = s.P.y;
  sol.OQ = s.Q.x;
  sol.OH = s.H.x;
  sol.HQ = s.Q.x - s.H.x;
  sol.QN = s.N.x - s.Q.x;
  sol.ratio_ON_OQ = s.N.x / sol.OQ;
  sol.ratio_OQ_HQ = sol.OQ / sol.HQ;
  sol.q_is_midpoint_of_HN = equals(sol.HQ, sol.QN);
  return sol;
}

LatusRectumRectangle latus_rectum_rectangle(const Real& semi_latus) {
  const Real one(1);
  return {{-one, semi_latus}, {one, semi_latus}, {-one, -semi_latus}, {one, -semi_latus}, semi_latus};
}

LatusRectumRectangle latus_rectum_rectangle(const ProblemSolution& sol) {
  const CoupledConicSystem sys(sol.a);
  return latus_rectum_rectangle(sys.b() * sys.b() / sys.a());
}

namespace {

std::array<Real, 3> sorted_sides(const Point& p, const Point& q, const Point& r) {
  std::array<Real, 3> s{euclid::distance(p, q), euclid::distance(q, r), euclid::distance(r, p)};
  std::sort(s.begin(), s.end(), [](const Real& x, const Real& y) { return less_than(x, y); });
  return s;
}

// Twice the signed area.
Real cross(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

}  // namespace

std::array<std::array<Real, 3>, 4> kepler_tiles(const LatusRectumRectangle& rect) {
  const Point F1{Real(-1), Real(0)};
  const Point F2{Real(1), Real(0)};
  return {sorted_sides(rect.A, rect.B, F2), sorted_sides(rect.C, rect.D, F2), sorted_sides(rect.A, F1, F2),
          sorted_sides(rect.C, F1, F2)};
}

bool kepler_decomposition_check(const LatusRectumRectangle& rect) {
  const Point F1{Real(-1), Real(0)};
  const Point F2{Real(1), Real(0)};
  const std::array<std::array<Point, 3>, 4> tiles{{{rect.A, rect.B, F2},
                                                   {rect.C, rect.D, F2},
                                                   {rect.A, F1, F2},
                                                   {rect.C, F1, F2}}};
  Real twice_area;
  for (const auto& t : tiles) {
    const Real twice = abs(cross(t[0], t[1], t[2]));
    if (twice.sign() == 0) return false;
    twice_area += twice;
  }
  const Real rect_area = euclid::distance(rect.A, rect.B) * euclid::distance(rect.A, rect.C);
  if (!equals(twice_area, Real(2) * rect_area)) return false;

  const auto sides = kepler_tiles(rect);
  for (const auto& s : sides) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (!equals(s[i], sides[0][i])) return false;
    }
  }
  const auto& s = sides[0];
  return equals(s[1] / s[0], exact::sqrt_phi()) && equals(s[2] / s[0], exact::phi());
}

double circumscribing_height(double r, double h) { return r * h / std::sqrt(h * h - r * r); }

double circumscribing_perimeter(double r, double h) {
  const double d = circumscribing_height(r, h);
  return 2 * h + 2 * std::hypot(d, h);
}

CircumscribedTriangle min_perimeter_isosceles_circumscribing_semicircle(double r, double tol, int max_iterations) {
  if (!(r > 0) || !std::isfinite(r)) throw OptimizationError(OptimizationErrorKind::InvalidRadius, "radius must be positive");
  if (!(tol > 0) || !std::isfinite(tol)) {
    throw OptimizationError(OptimizationErrorKind::InvalidTolerance, "tolerance must be positive");
  }
  auto f = [r](double h) { return circumscribing_perimeter(r, h); };
  // Derivative of the perimeter in h.
  auto slope = [r](double h) {
    const double g = h * h - r * r;
    return 2 + 2 * h * (h * h - 2 * r * r) / (g * std::sqrt(g));
  };

  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  double lo = r + tol;
  double hi = 100 * r;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  int it = 0;
  // Function values are flat near the minimum, so stop the section search
  // early and finish on the sign of the slope.
  const double coarse = std::max(tol, 1e-6 * r);
  while (hi - lo > coarse) {
    if (++it > max_iterations) throw OptimizationError(OptimizationErrorKind::NoConvergence, "iteration cap reached");
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  while (hi - lo > tol) {
    if (++it > max_iterations) throw OptimizationError(OptimizationErrorKind::NoConvergence, "iteration cap reached");
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (slope(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  CircumscribedTriangle out;
  out.half_base = lo + (hi - lo) / 2;
  out.height = circumscribing_height(r, out.half_base);
  out.perimeter = f(out.half_base);
  out.iterations = it;
  return out;
}

}  // namespace golden::conics
