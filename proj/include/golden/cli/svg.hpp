#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "golden/exact/constructible.hpp"

namespace golden::cli {

/// Fixed six-decimal rendering, locale independent, without negative zero.
std::string format_coordinate(double v);
/// Correctly rounded six-decimal rendering of an exact value.
std::string format_coordinate(const exact::Real& v);

struct ViewBox {
  double min_x = 0;
  double min_y = 0;
  double max_x = 1;
  double max_y = 1;
};

/// SVG 1.1 document in world coordinates (y up). Elements are written in the
/// order they are added.
class SvgDocument {
 public:
  SvgDocument(ViewBox box, int width_px);

  void polyline(const std::vector<std::pair<double, double>>& points, std::string_view cls, std::string_view id = {});
  void segment(const exact::Real& x1, const exact::Real& y1, const exact::Real& x2, const exact::Real& y2,
               std::string_view cls, std::string_view id = {});
  void segment(double x1, double y1, double x2, double y2, std::string_view cls, std::string_view id = {});
  void circle(const exact::Real& cx, const exact::Real& cy, const exact::Real& r, std::string_view cls,
              std::string_view id = {});
  void polygon(const std::vector<std::pair<exact::Real, exact::Real>>& points, std::string_view cls,
               std::string_view id = {});
  /// Point marker with a text label next to it.
  void point(const exact::Real& x, const exact::Real& y, std::string_view label);

  std::string str() const;

 private:
  std::string xy(double x, double y) const;
  std::string xy(const exact::Real& x, const exact::Real& y) const;

  ViewBox box_;
  int width_px_;
  std::vector<std::string> elements_;
};

}  // namespace golden::cli
