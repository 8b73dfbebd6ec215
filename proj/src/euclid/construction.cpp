#include "golden/euclid/construction.hpp"

#include <sstream>

namespace golden::euclid {

namespace {

std::string serialize_reals(const char* tag, std::vector<Real> values) {
  return std::string(tag) + "\n" + exact::serialize(values);
}

template <class T>
const T& as(const Object& obj, const char* what) {
  if (const T* v = std::get_if<T>(&obj)) return *v;
  throw std::invalid_argument(std::string("construction object is not a ") + what);
}

Point select(std::vector<Point> pts, int index) {
  if (index < 1 || static_cast<std::size_t>(index) > pts.size()) {
    throw GeometryError(GeometryErrorKind::NoIntersection,
                        "intersection " + std::to_string(index) + " requested, " + std::to_string(pts.size()) +
                            " available");
  }
  return pts[static_cast<std::size_t>(index - 1)];
}

}  // namespace

std::string serialize(const Object& obj) {
  if (const auto* p = std::get_if<Point>(&obj)) return serialize_reals("point", {p->x, p->y});
  if (const auto* l = std::get_if<Line>(&obj)) {
    return serialize_reals(l->is_ray() ? "ray" : "line", {l->p().x, l->p().y, l->q().x, l->q().y});
  }
  const auto& c = std::get<Circle>(obj);
  return serialize_reals("circle", {c.center().x, c.center().y, c.radius_squared()});
}

const char* to_string(Primitive p) {
  switch (p) {
    case Primitive::Given: return "given";
    case Primitive::LineThrough: return "line";
    case Primitive::RayThrough: return "ray";
    case Primitive::Midpoint: return "midpoint";
    case Primitive::CircleThrough: return "circle_through";
    case Primitive::CircleRadius: return "circle_radius";
    case Primitive::Perpendicular: return "perp_at";
    case Primitive::Parallel: return "parallel_through";
    case Primitive::Foot: return "foot";
    case Primitive::LineLine: return "intersect_lines";
    case Primitive::LineCircle: return "intersect_line_circle";
    case Primitive::CircleCircle: return "intersect_circles";
    case Primitive::PointOnRay: return "point_on_ray";
    case Primitive::Square: return "square";
  }
  return "?";
}

const Point& ConstructionTrace::point(std::size_t id) const { return as<Point>(object(id), "point"); }
const Line& ConstructionTrace::line(std::size_t id) const { return as<Line>(object(id), "line"); }
const Circle& ConstructionTrace::circle(std::size_t id) const { return as<Circle>(object(id), "circle"); }

void ConstructionTrace::begin_step(std::string label) { steps_.push_back({std::move(label), {}}); }

std::size_t ConstructionTrace::record(Primitive p, std::vector<std::size_t> args, int index, std::vector<Real> params,
                                     std::vector<Object> made) {
  if (steps_.empty()) begin_step("");
  TraceAction action{p, std::move(args), index, std::move(params), {}};
  for (auto& obj : made) {
    action.results.push_back(objects_.size());
    objects_.push_back(std::move(obj));
  }
  const std::size_t first = action.results.front();
  steps_.back().actions.push_back(std::move(action));
  return first;
}

std::size_t ConstructionTrace::given(Object obj) { return record(Primitive::Given, {}, 0, {}, {std::move(obj)}); }

std::size_t ConstructionTrace::line_through(std::size_t p, std::size_t q) {
  return record(Primitive::LineThrough, {p, q}, 0, {}, {Line(point(p), point(q))});
}

std::size_t ConstructionTrace::ray_through(std::size_t origin, std::size_t toward) {
  return record(Primitive::RayThrough, {origin, toward}, 0, {}, {Line(point(origin), point(toward), true)});
}

std::size_t ConstructionTrace::midpoint(std::size_t p, std::size_t q) {
  return record(Primitive::Midpoint, {p, q}, 0, {}, {euclid::midpoint(point(p), point(q))});
}

std::size_t ConstructionTrace::circle_through(std::size_t center, std::size_t on_circle) {
  return record(Primitive::CircleThrough, {center, on_circle}, 0, {}, {Circle::through(point(center), point(on_circle))});
}

std::size_t ConstructionTrace::circle_radius(std::size_t center, const Real& radius) {
  return record(Primitive::CircleRadius, {center}, 0, {radius}, {Circle::with_radius(point(center), radius)});
}

std::size_t ConstructionTrace::perpendicular_at(std::size_t pt, std::size_t l) {
  return record(Primitive::Perpendicular, {pt, l}, 0, {}, {euclid::perpendicular_at(point(pt), line(l))});
}

std::size_t ConstructionTrace::parallel_through(std::size_t pt, std::size_t l) {
  return record(Primitive::Parallel, {pt, l}, 0, {}, {euclid::parallel_through(point(pt), line(l))});
}

std::size_t ConstructionTrace::foot(std::size_t pt, std::size_t l) {
  return record(Primitive::Foot, {pt, l}, 0, {}, {euclid::foot(point(pt), line(l))});
}

std::size_t ConstructionTrace::intersect_lines(std::size_t l, std::size_t m) {
  return record(Primitive::LineLine, {l, m}, 0, {}, {intersect_line_line(line(l), line(m))});
}

std::size_t ConstructionTrace::intersect_line_circle(std::size_t l, std::size_t c, int index) {
  return record(Primitive::LineCircle, {l, c}, index, {}, {select(euclid::intersect_line_circle(line(l), circle(c)), index)});
}

std::size_t ConstructionTrace::intersect_circles(std::size_t c1, std::size_t c2, int index) {
  return record(Primitive::CircleCircle, {c1, c2}, index, {},
                {select(intersect_circle_circle(circle(c1), circle(c2)), index)});
}

std::size_t ConstructionTrace::point_on_ray(std::size_t l, const Real& d) {
  const Line& ln = line(l);
  return record(Primitive::PointOnRay, {l}, 0, {d}, {point_on_ray_at_distance(ln.p(), ln.q(), d)});
}

std::size_t ConstructionTrace::square(std::size_t a, std::size_t b, std::size_t away_from) {
  auto [d, e] = square_on_segment(point(a), point(b), point(away_from));
  return record(Primitive::Square, {a, b, away_from}, 0, {}, {std::move(d), std::move(e)});
}

void ConstructionTrace::run(const TraceAction& a) {
  const auto& x = a.args;
  switch (a.primitive) {
    case Primitive::Given: break;
    case Primitive::LineThrough: line_through(x[0], x[1]); break;
    case Primitive::RayThrough: ray_through(x[0], x[1]); break;
    case Primitive::Midpoint: midpoint(x[0], x[1]); break;
    case Primitive::CircleThrough: circle_through(x[0], x[1]); break;
    case Primitive::CircleRadius: circle_radius(x[0], a.params.at(0)); break;
    case Primitive::Perpendicular: perpendicular_at(x[0], x[1]); break;
    case Primitive::Parallel: parallel_through(x[0], x[1]); break;
    case Primitive::Foot: foot(x[0], x[1]); break;
    case Primitive::LineLine: intersect_lines(x[0], x[1]); break;
    case Primitive::LineCircle: intersect_line_circle(x[0], x[1], a.index); break;
    case Primitive::CircleCircle: intersect_circles(x[0], x[1], a.index); break;
    case Primitive::PointOnRay: point_on_ray(x[0], a.params.at(0)); break;
    case Primitive::Square: square(x[0], x[1], x[2]); break;
  }
}

ConstructionTrace ConstructionTrace::replay() const {
  ConstructionTrace out;
  for (const auto& step : steps_) {
    out.begin_step(step.label);
    for (const auto& action : step.actions) {
      if (action.primitive == Primitive::Given) {
        out.given(objects_.at(action.results.front()));
      } else {
        out.run(action);
      }
    }
  }
  return out;
}

std::string ConstructionTrace::serialize() const {
  std::string out;
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    out += "#" + std::to_string(i) + " " + euclid::serialize(objects_[i]);
  }
  return out;
}

std::string ConstructionTrace::describe() const {
  std::ostringstream out;
  for (const auto& step : steps_) {
    out << step.label << '\n';
    for (const auto& action : step.actions) {
      out << "  " << to_string(action.primitive) << '(';
      for (std::size_t i = 0; i < action.args.size(); ++i) out << (i ? ", #" : "#") << action.args[i];
      if (action.index != 0) out << "; " << action.index;
      for (const auto& v : action.params) out << "; " << v.to_decimal(12);
      out << ") ->";
      for (auto r : action.results) out << " #" << r;
      out << '\n';
    }
  }
  return out.str();
}

namespace {

// Records the intersection of l and c that satisfies `keep`.
template <class Pred>
std::size_t intersect_where(ConstructionTrace& trace, std::size_t l, std::size_t c, Pred keep) {
  const auto pts = intersect_line_circle(trace.line(l), trace.circle(c));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (keep(pts[i])) return trace.intersect_line_circle(l, c, static_cast<int>(i) + 1);
  }
  throw GeometryError(GeometryErrorKind::NoIntersection, "no intersection on the required side");
}

}  // namespace

std::size_t golden_extension_point(ConstructionTrace& trace, std::size_t a, std::size_t b) {
  if (trace.point(a) == trace.point(b)) throw GeometryError(GeometryErrorKind::CoincidentPoints, "golden extension of a point");
  const std::size_t m = trace.midpoint(a, b);
  const std::size_t ab = trace.line_through(a, b);
  const std::size_t up = trace.perpendicular_at(b, ab);
  const std::size_t g = trace.intersect_line_circle(up, trace.circle_through(b, a), 1);
  // |MG| = sqrt(5)/2 |AB|; swing it past A, then swing that point about B.
  const std::size_t back = trace.intersect_line_circle(trace.ray_through(m, a), trace.circle_through(m, g), 1);
  return trace.intersect_line_circle(trace.ray_through(a, b), trace.circle_through(b, back), 1);
}

Point golden_extension_point(const Point& a, const Point& b) {
  ConstructionTrace trace;
  const std::size_t ia = trace.given(a);
  const std::size_t ib = trace.given(b);
  return trace.point(golden_extension_point(trace, ia, ib));
}

std::size_t kepler_triangle(ConstructionTrace& trace, std::size_t b, std::size_t c) {
  const Point& pb = trace.point(b);
  const Point& pc = trace.point(c);
  if (!equals(squared_distance(pb, pc), Real(1))) {
    throw GeometryError(GeometryErrorKind::UnitLengthRequired, "Kepler triangle needs |BC| = 1");
  }
  // X with |XB| = phi on the far side of B; the Thales circle on XC meets the
  // perpendicular at B at height sqrt(phi * 1).
  const std::size_t x = golden_extension_point(trace, c, b);
  const std::size_t thales = trace.circle_through(trace.midpoint(x, c), c);
  const std::size_t up = trace.perpendicular_at(b, trace.line_through(b, c));
  const Point bb = trace.point(b);
  const Point cc = trace.point(c);
  return intersect_where(trace, up, thales, [&](const Point& p) { return orientation(bb, cc, p).sign() > 0; });
}

Triangle kepler_triangle(const Point& b, const Point& c) {
  ConstructionTrace trace;
  const std::size_t ib = trace.given(b);
  const std::size_t ic = trace.given(c);
  const std::size_t ia = kepler_triangle(trace, ib, ic);
  return Triangle(trace.point(ia), b, c);
}

ConstructedTriangle construct_T2_via_kepler() {
  ConstructionTrace t;
  t.begin_step("(1) Kepler triangle ABC with BC = 1 and AB = sqrt(phi)");
  const std::size_t b = t.given(Point{Real(0), Real(0)});
  const std::size_t c = t.given(Point{Real(1), Real(0)});
  const std::size_t a = kepler_triangle(t, b, c);
  t.begin_step("(2) square ABDE outside the triangle");
  const std::size_t d = t.square(a, b, c);
  const std::size_t e = d + 1;
  t.begin_step("(3) arc about B with radius BE meets the extension of BA at F");
  const std::size_t f = t.intersect_line_circle(t.ray_through(b, a), t.circle_through(b, e), 1);
  Triangle tri(t.point(f), t.point(b), t.point(c));
  return {std::move(tri), std::move(t)};
}

ConstructedTriangle construct_T2_via_thales() {
  ConstructionTrace t;
  t.begin_step("(1) C on the extension of AB with BC/BA = phi");
  const std::size_t a = t.given(Point{Real(0), Real(0)});
  const std::size_t b = t.given(Point{Real(1), Real(0)});
  const std::size_t c = golden_extension_point(t, a, b);
  t.begin_step("(2) D on the extension of BC with CD = BC");
  const Point pb = t.point(b);
  const std::size_t d = intersect_where(t, t.ray_through(b, c), t.circle_through(c, b),
                                        [&](const Point& p) { return !(p == pb); });
  t.begin_step("(3) semicircle on AD meets the perpendicular to AB at B in E");
  const std::size_t s = t.circle_through(t.midpoint(a, d), a);
  const std::size_t up = t.perpendicular_at(b, t.line_through(a, b));
  const Point pa = t.point(a);
  const std::size_t e = intersect_where(t, up, s, [&](const Point& p) { return orientation(pa, pb, p).sign() > 0; });
  Triangle tri(t.point(a), t.point(b), t.point(e));
  return {std::move(tri), std::move(t)};
}

}  // namespace golden::euclid
