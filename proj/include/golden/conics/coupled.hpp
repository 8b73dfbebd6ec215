#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "golden/euclid/point.hpp"
#include "golden/exact/constructible.hpp"
#include "golden/poly/polynomial.hpp"

namespace golden::conics {

using euclid::Point;
using exact::Rational;
using exact::Real;

/// Ellipse x^2/a^2 + y^2/b^2 = 1 and hyperbola x^2/c^2 - y^2/b^2 = 1 sharing
/// b, with c = 1 so that the foci of the ellipse are the vertices of the
/// hyperbola.
class CoupledConicSystem {
 public:
  /// Throws std::invalid_argument unless a > 1.
  explicit CoupledConicSystem(Real a);

  const Real& a() const { return a_; }
  const Real& b() const { return b_; }
  const Real& c() const { return c_; }
  /// Ellipse eccentricity c/a.
  Real e1() const { return c_ / a_; }
  /// Hyperbola eccentricity a/c (its own linear eccentricity is a).
  Real e2() const { return a_ / c_; }

  bool on_ellipse(const Point& p) const;
  bool on_hyperbola(const Point& p) const;

 private:
  Real a_;
  Real b_;
  Real c_;
};

struct SceneLayout {
  Point O, F1, F2, K, L, M, N, P, Q, H;
};

/// Top-right common point of the two curves.
std::pair<Real, Real> intersect_coupled(const CoupledConicSystem& sys);

SceneLayout scene(const CoupledConicSystem& sys);

/// The condition PN || KF2 written with the radicals eliminated, as a
/// polynomial in a.
poly::RationalPolynomial parallel_condition_polynomial();

/// PN || KF2 checked exactly on the unsquared equation, including the
/// requirement that N lies right of Q. False when a <= 1.
bool verify_parallel_condition(const Real& a);

struct RejectedRoot {
  Real value;
  std::string reason;
};

struct ProblemSolution {
  Real a;
  Real e1;
  Real e2;
  Real x_P;
  Real y_P;
  Real ratio_ON_OQ;
  Real ratio_OQ_HQ;
  Real OQ;
  Real OH;
  Real HQ;
  Real QN;
  bool q_is_midpoint_of_HN = false;
  /// Real roots of the condition polynomial that do not give a valid scene.
  std::vector<RejectedRoot> rejected;
};

ProblemSolution solve_problem();

struct LatusRectumRectangle {
  Point A, B, C, D;
  Real semi_latus;
};

/// Rectangle ACDB cut out by the two latus recta x = -1 and x = 1.
LatusRectumRectangle latus_rectum_rectangle(const ProblemSolution& sol);
LatusRectumRectangle latus_rectum_rectangle(const Real& semi_latus);

/// True iff the triangles ABF2, CDF2, AF1F2, CF1F2 tile the rectangle, are
/// pairwise congruent and have sides in ratio 1 : sqrt(phi) : phi.
bool kepler_decomposition_check(const LatusRectumRectangle& rect);

/// Side lengths of the four tiles, each sorted ascending.
std::array<std::array<Real, 3>, 4> kepler_tiles(const LatusRectumRectangle& rect);

enum class OptimizationErrorKind { InvalidRadius, InvalidTolerance, NoConvergence };

class OptimizationError : public std::runtime_error {
 public:
  OptimizationError(OptimizationErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  OptimizationErrorKind kind() const noexcept { return kind_; }

 private:
  OptimizationErrorKind kind_;
};

struct CircumscribedTriangle {
  double half_base = 0;
  double height = 0;
  double perimeter = 0;
  int iterations = 0;
};

/// Perimeter of the isosceles triangle with half base h whose legs touch a
/// semicircle of radius r sitting on the base. Requires h > r.
double circumscribing_perimeter(double r, double h);
double circumscribing_height(double r, double h);

/// Smallest-perimeter isosceles triangle around a semicircle of radius r,
/// found in floating point to within `tol` in the half base.
CircumscribedTriangle min_perimeter_isosceles_circumscribing_semicircle(double r, double tol,
                                                                       int max_iterations = 10000);

}  // namespace golden::conics
