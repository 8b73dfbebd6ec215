#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "golden/euclid/point.hpp"

namespace golden::euclid {

enum class GeometryErrorKind {
  CoincidentPoints,
  ParallelLines,
  NoIntersection,
  NonpositiveDistance,
  NonpositiveRadius,
  ReferenceOnLine,
  UnitLengthRequired,
  DegenerateTriangle,
  CoincidentCircles,
};

const char* to_string(GeometryErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(GeometryErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  GeometryErrorKind kind() const noexcept { return kind_; }

 private:
  GeometryErrorKind kind_;
};

/// Line through two distinct points, alpha x + beta y + gamma = 0 with
/// (alpha, beta) the left normal of p -> q. A ray starts at p and passes q.
class Line {
 public:
  Line(Point p, Point q, bool ray = false);
  /// Two defining points are chosen on the line. Throws when alpha = beta = 0.
  static Line from_implicit(const Real& alpha, const Real& beta, const Real& gamma);

  const Point& p() const { return p_; }
  const Point& q() const { return q_; }
  bool is_ray() const { return ray_; }
  const Real& alpha() const { return alpha_; }
  const Real& beta() const { return beta_; }
  const Real& gamma() const { return gamma_; }

  /// Value of alpha x + beta y + gamma at pt.
  Real evaluate(const Point& pt) const;
  /// Incidence with the full line, ignoring the ray flag.
  bool passes_through(const Point& pt) const;
  /// Incidence respecting the ray flag.
  bool contains(const Point& pt) const;

 private:
  Point p_;
  Point q_;
  bool ray_ = false;
  Real alpha_;
  Real beta_;
  Real gamma_;
};

/// Circle stored with its squared radius so that construction by center and
/// point introduces no radical.
class Circle {
 public:
  /// Throws NonpositiveRadius unless radius_squared > 0.
  Circle(Point center, Real radius_squared);
  static Circle through(const Point& center, const Point& on_circle);
  static Circle with_radius(const Point& center, const Real& radius);

  const Point& center() const { return center_; }
  const Real& radius_squared() const { return r2_; }
  Real radius() const { return sqrt(r2_); }
  bool contains(const Point& pt) const;

 private:
  Point center_;
  Real r2_;
};

struct Segment {
  Point a;
  Point b;
  Real length() const { return distance(a, b); }
};

class Triangle {
 public:
  /// Throws DegenerateTriangle when the vertices are collinear.
  Triangle(Point a, Point b, Point c);

  const Point& a() const { return v_[0]; }
  const Point& b() const { return v_[1]; }
  const Point& c() const { return v_[2]; }
  const std::array<Point, 3>& vertices() const { return v_; }
  /// |ab|, |bc|, |ca|.
  std::array<Real, 3> sides() const;
  std::array<Real, 3> sorted_sides() const;
  /// Squared side lengths, ascending; avoids the square roots of sides().
  std::array<Real, 3> sorted_squared_sides() const;

 private:
  std::array<Point, 3> v_;
};

Point midpoint(const Point& p, const Point& q);
Line line_through(const Point& p, const Point& q);
Line ray_through(const Point& origin, const Point& toward);

/// Twice the signed area of pqr; positive when r is left of p -> q.
Real orientation(const Point& p, const Point& q, const Point& r);
/// Lexicographic (x, y) order, exact.
bool point_less(const Point& p, const Point& q);

/// Throws ParallelLines (also for coincident lines) or NoIntersection when
/// a ray misses.
Point intersect_line_line(const Line& l, const Line& m);
/// Zero, one (tangency) or two points in lexicographic order.
std::vector<Point> intersect_line_circle(const Line& l, const Circle& c);
/// Throws CoincidentCircles for identical circles.
std::vector<Point> intersect_circle_circle(const Circle& c1, const Circle& c2);

Line perpendicular_at(const Point& pt, const Line& l);
Line parallel_through(const Point& pt, const Line& l);
Point foot(const Point& pt, const Line& l);
bool are_parallel(const Line& l, const Line& m);
bool same_line(const Line& l, const Line& m);
/// Throws NonpositiveDistance unless d > 0.
Point point_on_ray_at_distance(const Point& origin, const Point& toward, const Real& d);

/// Remaining vertices (D, E) of the square ABDE, in cyclic order A, B, D, E,
/// on the side of AB opposite `away_from`.
std::pair<Point, Point> square_on_segment(const Point& a, const Point& b, const Point& away_from);

bool is_right_triangle(const Triangle& t);
bool congruent(const Triangle& s, const Triangle& t);

}  // namespace golden::euclid
