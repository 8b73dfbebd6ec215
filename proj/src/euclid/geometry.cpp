#include "golden/euclid/geometry.hpp"

#include <algorithm>

namespace golden::euclid {

const char* to_string(GeometryErrorKind kind) {
  switch (kind) {
    case GeometryErrorKind::CoincidentPoints: return "CoincidentPoints";
    case GeometryErrorKind::ParallelLines: return "ParallelLines";
    case GeometryErrorKind::NoIntersection: return "NoIntersection";
    case GeometryErrorKind::NonpositiveDistance: return "NonpositiveDistance";
    case GeometryErrorKind::NonpositiveRadius: return "NonpositiveRadius";
    case GeometryErrorKind::ReferenceOnLine: return "ReferenceOnLine";
    case GeometryErrorKind::UnitLengthRequired: return "UnitLengthRequired";
    case GeometryErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case GeometryErrorKind::CoincidentCircles: return "CoincidentCircles";
  }
  return "GeometryError";
}

namespace {

[[noreturn]] void fail(GeometryErrorKind kind, const std::string& what) { throw GeometryError(kind, what); }

Real dot(const Real& ax, const Real& ay, const Real& bx, const Real& by) { return ax * bx + ay * by; }

void sort_points(std::vector<Point>& pts) { std::sort(pts.begin(), pts.end(), point_less); }

}  // namespace

Line::Line(Point p, Point q, bool ray) : p_(std::move(p)), q_(std::move(q)), ray_(ray) {
  if (p_ == q_) fail(GeometryErrorKind::CoincidentPoints, "a line needs two distinct points");
  alpha_ = p_.y - q_.y;
  beta_ = q_.x - p_.x;
  gamma_ = -(alpha_ * p_.x + beta_ * p_.y);
}

Line Line::from_implicit(const Real& alpha, const Real& beta, const Real& gamma) {
  if (beta.sign() != 0) {
    const Point p{Real(0), -gamma / beta};
    const Point q{beta, -(gamma + alpha * beta) / beta};
    return Line(p, q);
  }
  if (alpha.sign() == 0) fail(GeometryErrorKind::CoincidentPoints, "implicit line with zero normal");
  const Real x = -gamma / alpha;
  return Line({x, Real(0)}, {x, -alpha});
}

Real Line::evaluate(const Point& pt) const { return alpha_ * pt.x + beta_ * pt.y + gamma_; }

bool Line::passes_through(const Point& pt) const { return evaluate(pt).sign() == 0; }

bool Line::contains(const Point& pt) const {
  if (!passes_through(pt)) return false;
  if (!ray_) return true;
  return dot(pt.x - p_.x, pt.y - p_.y, q_.x - p_.x, q_.y - p_.y).sign() >= 0;
}

Circle::Circle(Point center, Real radius_squared) : center_(std::move(center)), r2_(std::move(radius_squared)) {
  if (r2_.sign() <= 0) fail(GeometryErrorKind::NonpositiveRadius, "circle radius must be positive");
}

Circle Circle::through(const Point& center, const Point& on_circle) {
  if (center == on_circle) fail(GeometryErrorKind::CoincidentPoints, "circle through its own center");
  return Circle(center, squared_distance(center, on_circle));
}

Circle Circle::with_radius(const Point& center, const Real& radius) {
  if (radius.sign() <= 0) fail(GeometryErrorKind::NonpositiveRadius, "circle radius must be positive");
  return Circle(center, radius * radius);
}

bool Circle::contains(const Point& pt) const { return equals(squared_distance(center_, pt), r2_); }

Triangle::Triangle(Point a, Point b, Point c) : v_{std::move(a), std::move(b), std::move(c)} {
  if (orientation(v_[0], v_[1], v_[2]).sign() == 0) fail(GeometryErrorKind::DegenerateTriangle, "collinear vertices");
}

std::array<Real, 3> Triangle::sides() const {
  return {distance(v_[0], v_[1]), distance(v_[1], v_[2]), distance(v_[2], v_[0])};
}

std::array<Real, 3> Triangle::sorted_sides() const {
  auto s = sides();
  std::sort(s.begin(), s.end(), [](const Real& x, const Real& y) { return less_than(x, y); });
  return s;
}

std::array<Real, 3> Triangle::sorted_squared_sides() const {
  std::array<Real, 3> s{squared_distance(v_[0], v_[1]), squared_distance(v_[1], v_[2]), squared_distance(v_[2], v_[0])};
  std::sort(s.begin(), s.end(), [](const Real& x, const Real& y) { return less_than(x, y); });
  return s;
}

Point midpoint(const Point& p, const Point& q) {
  const Real half(Rational(1, 2));
  return {(p.x + q.x) * half, (p.y + q.y) * half};
}

Line line_through(const Point& p, const Point& q) { return Line(p, q); }

Line ray_through(const Point& origin, const Point& toward) { return Line(origin, toward, true); }

Real orientation(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

bool point_less(const Point& p, const Point& q) {
  const auto cx = p.x <=> q.x;
  if (cx != 0) return cx < 0;
  return (p.y <=> q.y) < 0;
}

Point intersect_line_line(const Line& l, const Line& m) {
  const Real det = l.alpha() * m.beta() - m.alpha() * l.beta();
  if (det.sign() == 0) fail(GeometryErrorKind::ParallelLines, "lines are parallel");
  const Point pt{(l.beta() * m.gamma() - m.beta() * l.gamma()) / det,
                 (m.alpha() * l.gamma() - l.alpha() * m.gamma()) / det};
  if (!l.contains(pt) || !m.contains(pt)) fail(GeometryErrorKind::NoIntersection, "ray does not reach the other line");
  return pt;
}

std::vector<Point> intersect_line_circle(const Line& l, const Circle& c) {
  const Real n2 = l.alpha() * l.alpha() + l.beta() * l.beta();
  const Real delta = l.evaluate(c.center());
  const Real disc = c.radius_squared() * n2 - delta * delta;
  const int s = disc.sign();
  std::vector<Point> out;
  if (s < 0) return out;
  const Point f{c.center().x - delta * l.alpha() / n2, c.center().y - delta * l.beta() / n2};
  if (s == 0) {
    out.push_back(f);
  } else {
    const Real t = sqrt(disc) / n2;
    out.push_back({f.x - t * l.beta(), f.y + t * l.alpha()});
    out.push_back({f.x + t * l.beta(), f.y - t * l.alpha()});
  }
  std::erase_if(out, [&](const Point& pt) { return !l.contains(pt); });
  sort_points(out);
  return out;
}

std::vector<Point> intersect_circle_circle(const Circle& c1, const Circle& c2) {
  const Point& a = c1.center();
  const Point& b = c2.center();
  if (a == b) {
    if (c1.radius_squared() == c2.radius_squared()) fail(GeometryErrorKind::CoincidentCircles, "circles coincide");
    return {};
  }
  // Radical line: difference of the two circle equations.
  const Real alpha = Real(2) * (b.x - a.x);
  const Real beta = Real(2) * (b.y - a.y);
  const Real gamma =
      (a.x * a.x + a.y * a.y - c1.radius_squared()) - (b.x * b.x + b.y * b.y - c2.radius_squared());
  return intersect_line_circle(Line::from_implicit(alpha, beta, gamma), c1);
}

Line perpendicular_at(const Point& pt, const Line& l) {
  return Line(pt, {pt.x + l.alpha(), pt.y + l.beta()});
}

Line parallel_through(const Point& pt, const Line& l) {
  return Line(pt, {pt.x + l.q().x - l.p().x, pt.y + l.q().y - l.p().y});
}

Point foot(const Point& pt, const Line& l) {
  const Real n2 = l.alpha() * l.alpha() + l.beta() * l.beta();
  const Real delta = l.evaluate(pt);
  return {pt.x - delta * l.alpha() / n2, pt.y - delta * l.beta() / n2};
}

bool are_parallel(const Line& l, const Line& m) { return (l.alpha() * m.beta() - m.alpha() * l.beta()).sign() == 0; }

bool same_line(const Line& l, const Line& m) { return are_parallel(l, m) && l.passes_through(m.p()); }

Point point_on_ray_at_distance(const Point& origin, const Point& toward, const Real& d) {
  if (d.sign() <= 0) fail(GeometryErrorKind::NonpositiveDistance, "distance along a ray must be positive");
  if (origin == toward) fail(GeometryErrorKind::CoincidentPoints, "ray needs two distinct points");
  const Real scale = d / distance(origin, toward);
  return {origin.x + scale * (toward.x - origin.x), origin.y + scale * (toward.y - origin.y)};
}

std::pair<Point, Point> square_on_segment(const Point& a, const Point& b, const Point& away_from) {
  if (a == b) fail(GeometryErrorKind::CoincidentPoints, "square on a degenerate segment");
  const int side = orientation(a, b, away_from).sign();
  if (side == 0) fail(GeometryErrorKind::ReferenceOnLine, "reference point lies on the segment's line");
  // Left normal of a -> b, flipped to the side away from the reference.
  Real nx = a.y - b.y;
  Real ny = b.x - a.x;
  if (side > 0) {
    nx = -nx;
    ny = -ny;
  }
  return {{b.x + nx, b.y + ny}, {a.x + nx, a.y + ny}};
}

bool is_right_triangle(const Triangle& t) {
  const auto s = t.sorted_squared_sides();
  return equals(s[0] + s[1], s[2]);
}

bool congruent(const Triangle& s, const Triangle& t) {
  const auto a = s.sorted_squared_sides();
  const auto b = t.sorted_squared_sides();
  for (std::size_t i = 0; i < 3; ++i) {
    if (!equals(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace golden::euclid
