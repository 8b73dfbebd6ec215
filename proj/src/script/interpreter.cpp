#include "golden/script/interpreter.hpp"

#include <array>
#include <map>

#include "golden/exact/errors.hpp"

namespace golden::script {

using euclid::Circle;
using euclid::ConstructionTrace;
using euclid::Line;
using euclid::Point;
using euclid::Segment;
using euclid::Triangle;
using exact::Real;

namespace {

std::string summarize(const std::vector<Diagnostic>& ds) {
  if (ds.empty()) return "program has errors";
  std::string out = format(ds.front());
  if (ds.size() > 1) out += " (and " + std::to_string(ds.size() - 1) + " more)";
  return out;
}

const char* arithmetic_cause(exact::ArithmeticErrorKind kind) {
  switch (kind) {
    case exact::ArithmeticErrorKind::DivisionByZero: return "DivisionByZero";
    case exact::ArithmeticErrorKind::NegativeRadicand: return "NegativeRadicand";
    case exact::ArithmeticErrorKind::MalformedNumber: return "MalformedNumber";
  }
  return "ArithmeticError";
}

struct Entry {
  Kind kind;
  Value value;
  std::optional<std::size_t> trace_id;
};

class Interpreter {
 public:
  Scene run(const Program& program) {
    for (std::size_t i = 0; i < program.statements.size(); ++i) {
      const Statement& s = program.statements[i];
      try {
        statement(s);
      } catch (const euclid::GeometryError& e) {
        throw GeometryError(euclid::to_string(e.kind()), i, s.span, e.what());
      } catch (const exact::ArithmeticError& e) {
        throw GeometryError(arithmetic_cause(e.kind()), i, s.span, e.what());
      }
    }
    return std::move(scene_);
  }

 private:
  void statement(const Statement& s) {
    scene_.trace.begin_step(print(s));
    if (s.type == Statement::Type::Assert) {
      scene_.assertions.push_back({s.name, print(s.relation), holds(s.relation), s.span});
      return;
    }
    Entry e = s.kind == Kind::Scalar ? Entry{Kind::Scalar, scalar(s.expr), std::nullopt} : object(s.expr);
    names_[s.name] = scene_.objects.size();
    scene_.objects.push_back({s.name, s.kind, std::move(e.value), e.trace_id, s.name_span});
  }

  const SceneObject& named(const std::string& name) const { return scene_.objects[names_.at(name)]; }

  Real scalar(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Number: return Real(e.value);
      case ExprKind::Phi: return exact::phi();
      case ExprKind::Sqrt: return sqrt(scalar(e.args[0]));
      case ExprKind::Negate: return -scalar(e.args[0]);
      case ExprKind::Dist: return euclid::distance(point(e.args[0]), point(e.args[1]));
      case ExprKind::Name: return std::get<Real>(named(e.name).value);
      case ExprKind::Binary: {
        const Real a = scalar(e.args[0]);
        const Real b = scalar(e.args[1]);
        switch (e.op) {
          case '+': return a + b;
          case '-': return a - b;
          case '*': return a * b;
          default: return a / b;
        }
      }
      default: break;
    }
    throw std::logic_error("scalar expected");
  }

  Point point(const Expr& e) { return std::get<Point>(object(e).value); }

  std::size_t point_id(const Expr& e) { return *object(e).trace_id; }

  // Segments have no trace object of their own; their supporting line is
  // added when a primitive needs it.
  std::size_t line_id(const Expr& e) { return line_id(object(e)); }

  std::size_t line_id(const Entry& x) {
    if (x.trace_id) return *x.trace_id;
    const auto& seg = std::get<Segment>(x.value);
    const std::size_t a = scene_.trace.given(seg.a);
    const std::size_t b = scene_.trace.given(seg.b);
    return scene_.trace.line_through(a, b);
  }

  Entry traced(Kind kind, std::size_t id) {
    const auto& obj = scene_.trace.object(id);
    Value v = std::visit([](const auto& o) -> Value { return o; }, obj);
    return {kind, std::move(v), id};
  }

  Entry object(const Expr& e) {
    auto& t = scene_.trace;
    switch (e.kind) {
      case ExprKind::Name: {
        const SceneObject& o = named(e.name);
        return {o.kind, o.value, o.trace_id};
      }
      case ExprKind::PointLiteral: {
        Point p{scalar(e.args[0]), scalar(e.args[1])};
        return traced(Kind::Point, t.given(std::move(p)));
      }
      case ExprKind::Call: return call(e);
      default: break;
    }
    return {Kind::Scalar, scalar(e), std::nullopt};
  }

  Entry call(const Expr& e) {
    auto& t = scene_.trace;
    const auto& a = e.args;
    const std::string& f = e.name;
    if (f == "line") {
      const auto p = point_id(a[0]);
      return traced(Kind::Line, t.line_through(p, point_id(a[1])));
    }
    if (f == "ray") {
      const auto p = point_id(a[0]);
      return traced(Kind::Line, t.ray_through(p, point_id(a[1])));
    }
    if (f == "segment") {
      Point p = point(a[0]);
      Point q = point(a[1]);
      if (p == q) throw euclid::GeometryError(euclid::GeometryErrorKind::CoincidentPoints, "segment endpoints coincide");
      return {Kind::Segment, Segment{std::move(p), std::move(q)}, std::nullopt};
    }
    if (f == "circle") {
      const auto c = point_id(a[0]);
      return traced(Kind::Circle, t.circle_radius(c, scalar(a[1])));
    }
    if (f == "circle_through") {
      const auto c = point_id(a[0]);
      return traced(Kind::Circle, t.circle_through(c, point_id(a[1])));
    }
    if (f == "midpoint") {
      const auto p = point_id(a[0]);
      return traced(Kind::Point, t.midpoint(p, point_id(a[1])));
    }
    if (f == "foot") {
      const auto p = point_id(a[0]);
      return traced(Kind::Point, t.foot(p, line_id(a[1])));
    }
    if (f == "perp_at") {
      const auto p = point_id(a[0]);
      return traced(Kind::Line, t.perpendicular_at(p, line_id(a[1])));
    }
    if (f == "point_on") {
      const auto l = line_id(a[0]);
      return traced(Kind::Point, t.point_on_ray(l, scalar(a[1])));
    }
    if (f == "intersect") return intersect(e);
    if (f == "square_on_1" || f == "square_on_2") {
      const auto p = point_id(a[0]);
      const auto q = point_id(a[1]);
      const auto d = t.square(p, q, point_id(a[2]));
      return traced(Kind::Point, f == "square_on_1" ? d : d + 1);
    }
    if (f == "golden_ext") {
      const auto p = point_id(a[0]);
      return traced(Kind::Point, euclid::golden_extension_point(t, p, point_id(a[1])));
    }
    if (f == "kepler") {
      const auto p = point_id(a[0]);
      return traced(Kind::Point, euclid::kepler_triangle(t, p, point_id(a[1])));
    }
    if (f == "triangle") {
      Point p = point(a[0]);
      Point q = point(a[1]);
      return {Kind::Triangle, Triangle(std::move(p), std::move(q), point(a[2])), std::nullopt};
    }
    throw std::logic_error("unknown builtin " + f);
  }

  Entry intersect(const Expr& e) {
    auto& t = scene_.trace;
    const int index = static_cast<int>(e.args[2].value.numerator().get_si());
    const Entry x = object(e.args[0]);
    const Entry y = object(e.args[1]);
    const bool first_circle = x.kind == Kind::Circle;
    const bool second_circle = y.kind == Kind::Circle;
    const auto u = line_id(x);
    const auto v = line_id(y);
    if (first_circle && second_circle) return traced(Kind::Point, t.intersect_circles(u, v, index));
    if (first_circle) return traced(Kind::Point, t.intersect_line_circle(v, u, index));
    if (second_circle) return traced(Kind::Point, t.intersect_line_circle(u, v, index));
    if (index != 1) throw euclid::GeometryError(euclid::GeometryErrorKind::NoIntersection, "two lines meet at most once");
    return traced(Kind::Point, t.intersect_lines(u, v));
  }

  Line as_line(const SceneObject& o) const {
    if (const auto* s = std::get_if<Segment>(&o.value)) return euclid::line_through(s->a, s->b);
    return std::get<Line>(o.value);
  }

  bool holds(const Relation& r) {
    switch (r.kind) {
      case RelationKind::Equal: return scalar(r.scalars[0]) == scalar(r.scalars[1]);
      case RelationKind::RightAngle: {
        const Point& p = std::get<Point>(named(r.names[0]).value);
        const Point& q = std::get<Point>(named(r.names[1]).value);
        const Point& s = std::get<Point>(named(r.names[2]).value);
        if (p == q || s == q) return false;
        return (p.x - q.x) * (s.x - q.x) + (p.y - q.y) * (s.y - q.y) == Real(0);
      }
      case RelationKind::Parallel: return euclid::are_parallel(as_line(named(r.names[0])), as_line(named(r.names[1])));
      case RelationKind::Congruent: {
        const Value& x = named(r.names[0]).value;
        const Value& y = named(r.names[1]).value;
        if (const auto* s = std::get_if<Triangle>(&x)) return euclid::congruent(*s, std::get<Triangle>(y));
        return std::get<Segment>(x).length() == std::get<Segment>(y).length();
      }
    }
    return false;
  }

  Scene scene_;
  std::map<std::string, std::size_t> names_;
};

std::string value_text(const Value& v) {
  struct Visitor {
    std::string operator()(const Point& p) const { return euclid::serialize(p); }
    std::string operator()(const Line& l) const { return euclid::serialize(l); }
    std::string operator()(const Circle& c) const { return euclid::serialize(c); }
    std::string operator()(const Segment& s) const {
      return "segment " + euclid::serialize(s.a) + " " + euclid::serialize(s.b);
    }
    std::string operator()(const Real& x) const {
      const std::array<Real, 1> one{x};
      return "scalar " + exact::serialize(one);
    }
    std::string operator()(const Triangle& t) const {
      return "triangle " + euclid::serialize(t.a()) + " " + euclid::serialize(t.b()) + " " + euclid::serialize(t.c());
    }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace

CheckError::CheckError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

GeometryError::GeometryError(std::string cause, std::size_t step, SourceSpan span, const std::string& detail)
    : std::runtime_error(to_string(span) + ": " + cause + ": " + detail),
      cause_(std::move(cause)),
      step_(step),
      span_(span) {}

const SceneObject* Scene::find(const std::string& name) const {
  for (const auto& o : objects) {
    if (o.name == name) return &o;
  }
  return nullptr;
}

bool Scene::all_passed() const {
  for (const auto& a : assertions) {
    if (!a.passed) return false;
  }
  return true;
}

std::string Scene::serialize() const {
  std::string out;
  for (const auto& o : objects) out += o.name + " = " + value_text(o.value) + "\n";
  for (const auto& a : assertions) out += "assert " + a.name + (a.passed ? " holds" : " fails") + "\n";
  return out;
}

Scene execute(const Program& program) {
  auto diagnostics = check(program);
  if (!diagnostics.empty()) throw CheckError(std::move(diagnostics));
  return Interpreter().run(program);
}

}  // namespace golden::script
