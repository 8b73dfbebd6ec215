#include "golden/cli/svg.hpp"

#include <charconv>
#include <cmath>

namespace golden::cli {

namespace {

std::string strip_negative_zero(std::string s) {
  if (s.size() > 1 && s[0] == '-' && s.find_first_not_of("0.", 1) == std::string::npos) s.erase(0, 1);
  return s;
}

std::string attr_id(std::string_view id) { return id.empty() ? "" : " id=\"" + std::string(id) + "\""; }

std::string escape(std::string_view text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string format_coordinate(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
  return strip_negative_zero(std::string(buf, res.ptr));
}

std::string format_coordinate(const exact::Real& v) { return strip_negative_zero(v.to_decimal(6)); }

SvgDocument::SvgDocument(ViewBox box, int width_px) : box_(box), width_px_(width_px) {}

std::string SvgDocument::xy(double x, double y) const { return format_coordinate(x) + "," + format_coordinate(-y); }

std::string SvgDocument::xy(const exact::Real& x, const exact::Real& y) const {
  return format_coordinate(x) + "," + format_coordinate(-y);
}

void SvgDocument::polyline(const std::vector<std::pair<double, double>>& points, std::string_view cls,
                           std::string_view id) {
  std::string pts;
  for (const auto& [x, y] : points) {
    if (!pts.empty()) pts += ' ';
    pts += xy(x, y);
  }
  elements_.push_back("<polyline class=\"" + std::string(cls) + "\"" + attr_id(id) + " points=\"" + pts + "\"/>");
}

void SvgDocument::segment(const exact::Real& x1, const exact::Real& y1, const exact::Real& x2, const exact::Real& y2,
                          std::string_view cls, std::string_view id) {
  elements_.push_back("<line class=\"" + std::string(cls) + "\"" + attr_id(id) + " x1=\"" + format_coordinate(x1) +
                      "\" y1=\"" + format_coordinate(-y1) + "\" x2=\"" + format_coordinate(x2) + "\" y2=\"" +
                      format_coordinate(-y2) + "\"/>");
}

void SvgDocument::segment(double x1, double y1, double x2, double y2, std::string_view cls, std::string_view id) {
  elements_.push_back("<line class=\"" + std::string(cls) + "\"" + attr_id(id) + " x1=\"" + format_coordinate(x1) +
                      "\" y1=\"" + format_coordinate(-y1) + "\" x2=\"" + format_coordinate(x2) + "\" y2=\"" +
                      format_coordinate(-y2) + "\"/>");
}

void SvgDocument::circle(const exact::Real& cx, const exact::Real& cy, const exact::Real& r, std::string_view cls,
                         std::string_view id) {
  elements_.push_back("<circle class=\"" + std::string(cls) + "\"" + attr_id(id) + " cx=\"" + format_coordinate(cx) +
                      "\" cy=\"" + format_coordinate(-cy) + "\" r=\"" + format_coordinate(r) + "\"/>");
}

void SvgDocument::polygon(const std::vector<std::pair<exact::Real, exact::Real>>& points, std::string_view cls,
                          std::string_view id) {
  std::string pts;
  for (const auto& [x, y] : points) {
    if (!pts.empty()) pts += ' ';
    pts += xy(x, y);
  }
  elements_.push_back("<polygon class=\"" + std::string(cls) + "\"" + attr_id(id) + " points=\"" + pts + "\"/>");
}

void SvgDocument::point(const exact::Real& x, const exact::Real& y, std::string_view label) {
  const std::string cx = format_coordinate(x);
  const std::string cy = format_coordinate(-y);
  const double size = (box_.max_x - box_.min_x) / 60.0;
  elements_.push_back("<g class=\"point\" id=\"pt-" + escape(label) + "\"><circle cx=\"" + cx + "\" cy=\"" + cy +
                      "\" r=\"" + format_coordinate(size / 3) + "\"/><text x=\"" + cx + "\" y=\"" + cy + "\" dx=\"" +
                      format_coordinate(size / 2) + "\" dy=\"" + format_coordinate(-size / 2) + "\" font-size=\"" +
                      format_coordinate(size * 1.6) + "\">" + escape(label) + "</text></g>");
}

std::string SvgDocument::str() const {
  const double w = box_.max_x - box_.min_x;
  const double h = box_.max_y - box_.min_y;
  const double height_px = std::round(width_px_ * h / w);
  const double stroke = w / 400.0;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(width_px_) +
         "\" height=\"" + std::to_string(static_cast<long>(height_px)) +
         "\" viewBox=\"" + format_coordinate(box_.min_x) + " " + format_coordinate(-box_.max_y) + " " +
         format_coordinate(w) + " " + format_coordinate(h) + "\">\n";
  out += "<style>\n";
  out += "  * { fill: none; stroke: #000; stroke-width: " + format_coordinate(stroke) + "; }\n";
  out += "  .curve { stroke: #1f4e9c; }\n";
  out += "  .aux { stroke: #999; stroke-dasharray: " + format_coordinate(stroke * 4) + "; }\n";
  out += "  .axis { stroke: #bbb; }\n";
  out += "  .directrix { stroke: #a33; stroke-dasharray: " + format_coordinate(stroke * 6) + "; }\n";
  out += "  .figure { fill: #f3e2b3; fill-opacity: 0.5; }\n";
  out += "  .point circle { fill: #000; stroke: none; }\n";
  out += "  .point text { fill: #000; stroke: none; font-family: serif; }\n";
  out += "</style>\n";
  for (const auto& e : elements_) out += e + "\n";
  out += "</svg>\n";
  return out;
}

}  // namespace golden::cli
