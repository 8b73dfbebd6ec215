#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "golden/euclid/geometry.hpp"

namespace golden::euclid {

using Object = std::variant<Point, Line, Circle>;

/// Exact, lossless text form of an object. Equal objects built the same way
/// serialize identically.
std::string serialize(const Object& obj);

enum class Primitive {
  Given,
  LineThrough,
  RayThrough,
  Midpoint,
  CircleThrough,
  CircleRadius,
  Perpendicular,
  Parallel,
  Foot,
  LineLine,
  LineCircle,
  CircleCircle,
  PointOnRay,
  Square,
};

const char* to_string(Primitive p);

struct TraceAction {
  Primitive primitive;
  std::vector<std::size_t> args;
  /// Intersection index, 1-based, for multi-valued primitives.
  int index = 0;
  /// Radius or distance for primitives that take a length.
  std::vector<Real> params;
  std::vector<std::size_t> results;
};

struct TraceStep {
  std::string label;
  std::vector<TraceAction> actions;
};

/// Every object created during a construction, with the steps that made it.
/// Objects are referred to by position.
class ConstructionTrace {
 public:
  std::size_t given(Object obj);
  void begin_step(std::string label);

  std::size_t line_through(std::size_t p, std::size_t q);
  std::size_t ray_through(std::size_t origin, std::size_t toward);
  std::size_t midpoint(std::size_t p, std::size_t q);
  std::size_t circle_through(std::size_t center, std::size_t on_circle);
  std::size_t circle_radius(std::size_t center, const Real& radius);
  std::size_t perpendicular_at(std::size_t pt, std::size_t line);
  std::size_t parallel_through(std::size_t pt, std::size_t line);
  std::size_t foot(std::size_t pt, std::size_t line);
  std::size_t intersect_lines(std::size_t l, std::size_t m);
  /// index is 1 or 2 in lexicographic order; a tangency only has index 1.
  std::size_t intersect_line_circle(std::size_t l, std::size_t c, int index);
  std::size_t intersect_circles(std::size_t c1, std::size_t c2, int index);
  /// Point at distance d from the first defining point of `line`, toward
  /// the second.
  std::size_t point_on_ray(std::size_t line, const Real& d);
  /// Adds D then E of square ABDE; returns the id of D (E follows).
  std::size_t square(std::size_t a, std::size_t b, std::size_t away_from);

  const Object& object(std::size_t id) const { return objects_.at(id); }
  const Point& point(std::size_t id) const;
  const Line& line(std::size_t id) const;
  const Circle& circle(std::size_t id) const;
  const std::vector<Object>& objects() const { return objects_; }
  const std::vector<TraceStep>& steps() const { return steps_; }

  /// Re-executes every action from the given objects.
  ConstructionTrace replay() const;
  /// Serialized form of every object, one per line.
  std::string serialize() const;
  /// Step list as readable text.
  std::string describe() const;

 private:
  std::size_t record(Primitive p, std::vector<std::size_t> args, int index, std::vector<Real> params,
                     std::vector<Object> made);
  void run(const TraceAction& action);

  std::vector<Object> objects_;
  std::vector<TraceStep> steps_;
};

/// Point C on ray A -> B beyond B with |BC| = phi |AB|, by the midpoint and
/// arc construction.
Point golden_extension_point(const Point& a, const Point& b);
std::size_t golden_extension_point(ConstructionTrace& trace, std::size_t a, std::size_t b);

/// Right triangle ABC with the right angle at B, |AB| = sqrt(phi) and
/// |AC| = phi, A left of ray B -> C. Requires |BC| = 1.
Triangle kepler_triangle(const Point& b, const Point& c);
/// Returns the id of A.
std::size_t kepler_triangle(ConstructionTrace& trace, std::size_t b, std::size_t c);

struct ConstructedTriangle {
  Triangle triangle;
  ConstructionTrace trace;
};

/// Square on the long leg of a Kepler triangle; its diagonal swung onto the
/// extension of BA gives F. Returns FBC.
ConstructedTriangle construct_T2_via_kepler();
/// Golden extension, doubled, Thales semicircle and a perpendicular at B.
/// Returns ABE.
ConstructedTriangle construct_T2_via_thales();

}  // namespace golden::euclid
