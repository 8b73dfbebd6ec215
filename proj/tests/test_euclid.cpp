#include "doctest.h"

#include <random>

#include "golden/conics/coupled.hpp"
#include "golden/euclid/construction.hpp"

using namespace golden::euclid;
using golden::exact::phi;
using golden::exact::phi_sqrt_phi;
using golden::exact::sqrt_phi;
using golden::exact::sqrt_two_phi;

namespace {

Point pt(std::int64_t x, std::int64_t y) { return {Real(x), Real(y)}; }

GeometryErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  FAIL("no GeometryError thrown");
  return GeometryErrorKind::NoIntersection;
}

}  // namespace

TEST_CASE("basic primitives") {
  CHECK(midpoint(pt(0, 0), pt(2, 0)) == pt(1, 0));
  CHECK(distance(pt(0, 0), pt(1, 0)) == Real(1));
  CHECK(distance(pt(0, 0), pt(3, 4)) == Real(5));
  CHECK(kind_of([] { (void)line_through(pt(1, 1), pt(1, 1)); }) == GeometryErrorKind::CoincidentPoints);

  const Line x_axis = line_through(pt(0, 0), pt(1, 0));
  const Line y_axis = perpendicular_at(pt(0, 0), x_axis);
  CHECK(same_line(y_axis, line_through(pt(0, 5), pt(0, -3))));
  CHECK(y_axis.passes_through(pt(0, 7)));
  CHECK(point_on_ray_at_distance(pt(0, 0), pt(1, 0), phi()) == Point{phi(), Real(0)});
  CHECK(point_on_ray_at_distance(pt(2, 2), pt(5, 6), Real(10)) == pt(8, 10));
  CHECK(kind_of([] { (void)point_on_ray_at_distance(pt(0, 0), pt(1, 0), Real(0)); }) ==
        GeometryErrorKind::NonpositiveDistance);
  CHECK(foot(pt(3, 5), x_axis) == pt(3, 0));
  CHECK(are_parallel(parallel_through(pt(0, 4), x_axis), x_axis));
  CHECK(kind_of([] { (void)Circle(pt(0, 0), Real(0)); }) == GeometryErrorKind::NonpositiveRadius);
}

TEST_CASE("line through is symmetric as a point set") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> u(-9, 9);
  for (int i = 0; i < 30; ++i) {
    const Point p = pt(u(rng), u(rng));
    Point q = pt(u(rng), u(rng));
    if (p == q) q = Point{p.x + Real(1), p.y};
    const Line l = line_through(p, q);
    const Line m = line_through(q, p);
    CHECK(same_line(l, m));
    const Real t(Rational(u(rng), 7));
    const Point s{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
    CHECK(l.passes_through(s));
    CHECK(m.passes_through(s));
    CHECK(midpoint(p, q) == midpoint(q, p));
    CHECK(distance(p, q) == distance(q, p));
  }
}

TEST_CASE("intersections") {
  const Circle unit(pt(0, 0), Real(1));
  const auto two = intersect_line_circle(line_through(pt(0, 0), pt(1, 0)), unit);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == pt(-1, 0));
  CHECK(two[1] == pt(1, 0));
  const auto one = intersect_line_circle(line_through(pt(1, 0), pt(1, 5)), unit);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == pt(1, 0));
  CHECK(intersect_line_circle(line_through(pt(2, 0), pt(2, 5)), unit).empty());
  // Rays keep only the forward part.
  const auto fwd = intersect_line_circle(ray_through(pt(0, 0), pt(1, 0)), unit);
  REQUIRE(fwd.size() == 1);
  CHECK(fwd[0] == pt(1, 0));

  CHECK(intersect_line_line(line_through(pt(0, 0), pt(1, 1)), line_through(pt(0, 2), pt(2, 0))) == pt(1, 1));
  CHECK(kind_of([] { (void)intersect_line_line(line_through(pt(0, 0), pt(1, 1)), line_through(pt(0, 1), pt(1, 2))); }) ==
        GeometryErrorKind::ParallelLines);
  CHECK(kind_of([] { (void)intersect_line_line(ray_through(pt(0, 0), pt(1, 0)), line_through(pt(-1, -1), pt(-1, 1))); }) ==
        GeometryErrorKind::NoIntersection);

  const auto cc = intersect_circle_circle(unit, Circle(pt(1, 0), Real(1)));
  REQUIRE(cc.size() == 2);
  const Real h = sqrt(Real(3)) / Real(2);
  CHECK(cc[0] == Point{Real(Rational(1, 2)), -h});
  CHECK(cc[1] == Point{Real(Rational(1, 2)), h});
  CHECK(intersect_circle_circle(unit, Circle(pt(2, 0), Real(1))).size() == 1);
  CHECK(intersect_circle_circle(unit, Circle(pt(5, 0), Real(1))).empty());
  CHECK(intersect_circle_circle(unit, Circle(pt(0, 0), Real(4))).empty());
  CHECK(kind_of([&] { (void)intersect_circle_circle(unit, unit); }) == GeometryErrorKind::CoincidentCircles);
}

TEST_CASE("intersections lie on both objects") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> u(-5, 5);
  int found = 0;
  for (int i = 0; i < 40; ++i) {
    const Circle c1(pt(u(rng), u(rng)), Real(1 + (u(rng) + 5)));
    const Circle c2(Point{Real(u(rng)), sqrt(Real(2 + u(rng) + 5))}, Real(1 + (u(rng) + 5)));
    const Line l = line_through(pt(u(rng), u(rng)), Point{Real(u(rng)) + phi(), Real(u(rng))});
    for (const Point& p : intersect_circle_circle(c1, c2)) {
      ++found;
      CHECK(c1.contains(p));
      CHECK(c2.contains(p));
    }
    const auto lc = intersect_line_circle(l, c1);
    for (const Point& p : lc) {
      ++found;
      CHECK(l.passes_through(p));
      CHECK(c1.contains(p));
    }
    if (lc.size() == 2) CHECK(point_less(lc[0], lc[1]));
  }
  CHECK(found > 20);
}

TEST_CASE("square on a segment") {
  const auto [d, e] = square_on_segment(pt(0, 1), pt(0, 0), pt(1, 0));
  CHECK(d == pt(-1, 0));
  CHECK(e == pt(-1, 1));
  CHECK(distance(d, e) == Real(1));
  CHECK(distance(pt(0, 0), e) == sqrt(Real(2)));
  CHECK(kind_of([] { (void)square_on_segment(pt(0, 0), pt(1, 0), pt(5, 0)); }) == GeometryErrorKind::ReferenceOnLine);
  CHECK(kind_of([] { (void)square_on_segment(pt(0, 0), pt(0, 0), pt(5, 0)); }) == GeometryErrorKind::CoincidentPoints);

  const Point a{Real(1), sqrt(Real(3))};
  const Point b{phi(), Real(-2)};
  const auto [d2, e2] = square_on_segment(a, b, pt(10, 10));
  const Real side = distance(a, b);
  CHECK(distance(b, d2) == side);
  CHECK(distance(d2, e2) == side);
  CHECK(distance(e2, a) == side);
  CHECK(distance(b, e2) == sqrt(Real(2)) * side);
  CHECK(orientation(a, b, d2).sign() == -orientation(a, b, pt(10, 10)).sign());
}

TEST_CASE("golden extension") {
  const Point c = golden_extension_point(pt(0, 0), pt(1, 0));
  CHECK(c == Point{Real(1) + phi(), Real(0)});
  CHECK(c == Point{phi() * phi(), Real(0)});
  CHECK(distance(pt(1, 0), c) / distance(pt(0, 0), pt(1, 0)) == phi());
  CHECK(kind_of([] { (void)golden_extension_point(pt(1, 1), pt(1, 1)); }) == GeometryErrorKind::CoincidentPoints);

  // Rigid motions: translate and rotate by a Pythagorean angle.
  const Real cs(Rational(3, 5));
  const Real sn(Rational(4, 5));
  auto move = [&](const Point& p) {
    return Point{cs * p.x - sn * p.y + Real(2), sn * p.x + cs * p.y - Real(7)};
  };
  const Point a0 = pt(0, 0);
  const Point b0{Real(3), Real(Rational(5, 2))};
  const Point c0 = golden_extension_point(a0, b0);
  const Point c1 = golden_extension_point(move(a0), move(b0));
  CHECK(c1 == move(c0));
  CHECK(distance(b0, c0) == phi() * distance(a0, b0));
}

TEST_CASE("Kepler triangle") {
  const Triangle k = kepler_triangle(pt(0, 0), pt(1, 0));
  CHECK(k.a() == Point{Real(0), sqrt_phi()});
  const auto s = k.sorted_sides();
  CHECK(s[0] == Real(1));
  CHECK(s[1] == sqrt_phi());
  CHECK(s[2] == phi());
  CHECK(s[0] * s[0] + s[1] * s[1] == s[2] * s[2]);
  CHECK(distance(k.a(), k.b()).to_decimal(7) == "1.2720196");
  // Right angle at B.
  CHECK(((k.a().x - k.b().x) * (k.c().x - k.b().x) + (k.a().y - k.b().y) * (k.c().y - k.b().y)).sign() == 0);
  CHECK(is_right_triangle(k));
  CHECK(kind_of([] { (void)kepler_triangle(pt(0, 0), pt(2, 0)); }) == GeometryErrorKind::UnitLengthRequired);

  // A general unit segment; A stays on the left.
  const Point b{Real(3), Real(1)};
  const Point c{Real(3) + Real(Rational(3, 5)), Real(1) + Real(Rational(4, 5))};
  const Triangle g = kepler_triangle(b, c);
  CHECK(orientation(b, c, g.a()).sign() == 1);
  CHECK(congruent(g, k));
}

TEST_CASE("T2 by way of the Kepler triangle") {
  const auto [t, trace] = construct_T2_via_kepler();
  const auto s = t.sides();
  // Vertices F, B, C.
  CHECK(s[0] == sqrt_two_phi());
  CHECK(s[1] == Real(1));
  CHECK(s[2] == phi_sqrt_phi());
  CHECK(s[2].to_decimal(7) == "2.0581710");
  CHECK(is_right_triangle(t));
  CHECK(Real(1) + Real(2) * phi() == phi() * phi() * phi());
  CHECK(trace.steps().size() == 3);
  CHECK(t.a() == Point{Real(0), sqrt_two_phi()});
}

TEST_CASE("T2 by way of the Thales circle") {
  const auto [t, trace] = construct_T2_via_thales();
  const auto s = t.sides();
  // Vertices A, B, E.
  CHECK(s[0] == Real(1));
  CHECK(s[1] == sqrt_two_phi());
  CHECK(s[2] == phi_sqrt_phi());
  CHECK(s[2].to_decimal(7) == "2.0581710");
  CHECK(is_right_triangle(t));
  CHECK(trace.steps().size() == 3);
  CHECK(t.c() == Point{Real(1), sqrt_two_phi()});
}

TEST_CASE("the two constructions agree with each other and with the conic scene") {
  const auto k = construct_T2_via_kepler();
  const auto th = construct_T2_via_thales();
  CHECK(congruent(k.triangle, th.triangle));
  const auto sorted = k.triangle.sorted_sides();
  CHECK(sorted[0] == Real(1));
  CHECK(sorted[1] == sqrt_two_phi());
  CHECK(sorted[2] == phi_sqrt_phi());

  const golden::conics::CoupledConicSystem sys(golden::conics::solve_problem().a);
  const auto scene = golden::conics::scene(sys);
  CHECK(congruent(Triangle(scene.K, scene.O, scene.F2), th.triangle));
}

TEST_CASE("triangle predicates") {
  CHECK(is_right_triangle(Triangle(pt(0, 0), pt(3, 0), pt(0, 4))));
  CHECK_FALSE(is_right_triangle(Triangle(pt(0, 0), pt(2, 0), Point{Real(1), sqrt(Real(3))})));
  CHECK(kind_of([] { (void)Triangle(pt(0, 0), pt(1, 1), pt(2, 2)); }) == GeometryErrorKind::DegenerateTriangle);
  CHECK(congruent(Triangle(pt(0, 0), pt(3, 0), pt(0, 4)), Triangle(pt(5, 5), pt(5, 9), pt(8, 5))));
  CHECK_FALSE(congruent(Triangle(pt(0, 0), pt(3, 0), pt(0, 4)), Triangle(pt(0, 0), pt(3, 0), pt(0, 5))));
}

TEST_CASE("traces replay identically") {
  for (const auto& built : {construct_T2_via_kepler(), construct_T2_via_thales()}) {
    const auto again = built.trace.replay();
    CHECK(again.serialize() == built.trace.serialize());
    CHECK(again.describe() == built.trace.describe());
    CHECK(again.steps().size() == 3);
  }
  CHECK(construct_T2_via_kepler().trace.serialize() == construct_T2_via_kepler().trace.serialize());
  CHECK(construct_T2_via_thales().trace.describe().find("(3) semicircle") != std::string::npos);
}
