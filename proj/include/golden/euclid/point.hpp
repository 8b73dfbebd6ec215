#pragma once

#include "golden/exact/constructible.hpp"

namespace golden::euclid {

using exact::Rational;
using exact::Real;

struct Point {
  Real x;
  Real y;

  friend bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }
};

inline Real squared_distance(const Point& p, const Point& q) {
  const Real dx = q.x - p.x;
  const Real dy = q.y - p.y;
  return dx * dx + dy * dy;
}

inline Real distance(const Point& p, const Point& q) { return sqrt(squared_distance(p, q)); }

}  // namespace golden::euclid
