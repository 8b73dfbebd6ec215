#include "golden/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "golden/cli/svg.hpp"
#include "golden/cli/verify.hpp"
#include "golden/conics/coupled.hpp"
#include "golden/exact/errors.hpp"
#include "golden/script/parser.hpp"

namespace golden::cli {

using exact::Rational;
using exact::Real;

namespace {

Real evaluate_form(const std::string& form) {
  const script::Scene s = script::execute(script::parse("scalar v = " + form));
  return std::get<Real>(s.objects.front().value);
}

std::string fixed(double v, int places) {
  char buf[128];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, places);
  return std::string(buf, res.ptr);
}

std::string scientific(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 2);
  return std::string(buf, res.ptr);
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (f) f << content;
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

}  // namespace

SolutionReport solution_report(unsigned digits) {
  const conics::ProblemSolution sol = conics::solve_problem();
  struct Spec {
    const char* key;
    const char* label;
    const char* form;
    const Real* value;
  };
  const Spec specs[] = {
      {"a", "a", "phi*sqrt(phi)", &sol.a},
      {"e1", "e1", "1/(phi*sqrt(phi))", &sol.e1},
      {"e2", "e2", "phi*sqrt(phi)", &sol.e2},
      {"on_oq", "ON/OQ", "phi", &sol.ratio_ON_OQ},
      {"oq_hq", "OQ/HQ", "phi", &sol.ratio_OQ_HQ},
      {"oq", "OQ", "sqrt(phi)", &sol.OQ},
      {"hq", "HQ", "1/sqrt(phi)", &sol.HQ},
      {"qn", "QN", "1/sqrt(phi)", &sol.QN},
  };
  SolutionReport report;
  for (const auto& s : specs) {
    if (evaluate_form(s.form) != *s.value) throw std::logic_error(std::string("closed form mismatch for ") + s.key);
    report.rows.push_back({s.key, s.label, s.form, s.value->to_decimal(digits)});
  }
  report.q_midpoint_hn = sol.q_is_midpoint_of_HN;
  for (const auto& r : sol.rejected) report.rejected.push_back(r.value.to_decimal(digits) + " (" + r.reason + ")");
  return report;
}

std::string render_text(const SolutionReport& report) {
  std::string out = "Coupled ellipse and hyperbola with PN parallel to KF2\n";
  for (const auto& r : report.rows) out += "  " + pad(r.label, 7) + "= " + pad(r.exact, 20) + r.decimal + "\n";
  out += std::string("  Q is the midpoint of HN: ") + (report.q_midpoint_hn ? "yes" : "no") + "\n";
  out += "  other real roots of the condition polynomial:\n";
  for (const auto& r : report.rejected) out += "    " + r + "\n";
  return out;
}

std::string render_json(const SolutionReport& report) {
  nlohmann::ordered_json j;
  for (const auto& r : report.rows) j[r.key] = {{"exact", r.exact}, {"decimal", r.decimal}};
  j["q_midpoint_hn"] = report.q_midpoint_hn;
  return j.dump(2) + "\n";
}

std::string figure1_svg(int samples) {
  const conics::ProblemSolution sol = conics::solve_problem();
  const conics::CoupledConicSystem sys(sol.a);
  const conics::SceneLayout s = conics::scene(sys);

  const double a = sol.a.to_double();
  const double b = sys.b().to_double();
  const double c = sys.c().to_double();
  const double y_p = sol.y_P.to_double();
  const double y_span = 1.1 * y_p;
  const double x_far = c * std::sqrt(1 + (y_span * y_span) / (b * b));
  const double margin = 0.4;
  const double y_max = std::max(b, y_span) + margin;
  SvgDocument doc({-a - margin, -y_max, std::max(a, x_far) + margin, y_max}, 800);

  doc.segment(-a - margin, 0.0, std::max(a, x_far) + margin, 0.0, "axis");
  doc.segment(0.0, -y_max, 0.0, y_max, "axis");

  std::vector<std::pair<double, double>> ellipse;
  const double pi = std::acos(-1.0);
  for (int k = 0; k <= samples; ++k) {
    const double t = 2 * pi * k / samples;
    ellipse.emplace_back(a * std::cos(t), b * std::sin(t));
  }
  doc.polyline(ellipse, "curve", "ellipse");

  std::vector<std::pair<double, double>> branch;
  for (int k = 0; k < samples; ++k) {
    const double y = -y_span + 2 * y_span * k / (samples - 1);
    branch.emplace_back(c * std::sqrt(1 + (y * y) / (b * b)), y);
  }
  doc.polyline(branch, "curve", "hyperbola");

  const double h_x = s.H.x.to_double();
  doc.segment(h_x, -y_max, h_x, y_max, "directrix", "directrix");
  doc.segment(s.K.x, s.K.y, s.F2.x, s.F2.y, "segment", "seg-KF2");
  doc.segment(s.P.x, s.P.y, s.N.x, s.N.y, "segment", "seg-PN");
  doc.segment(s.P.x, s.P.y, s.Q.x, s.Q.y, "aux", "seg-PQ");

  const std::pair<const char*, const euclid::Point*> points[] = {
      {"O", &s.O}, {"F1", &s.F1}, {"F2", &s.F2}, {"K", &s.K}, {"L", &s.L},
      {"M", &s.M}, {"N", &s.N},   {"P", &s.P},   {"Q", &s.Q}, {"H", &s.H},
  };
  for (const auto& [label, p] : points) doc.point(p->x, p->y, label);
  return doc.str();
}

namespace {

struct Bounds {
  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = std::numeric_limits<double>::infinity();
  double hi_x = -std::numeric_limits<double>::infinity();
  double hi_y = -std::numeric_limits<double>::infinity();

  void add(double x, double y) {
    lo_x = std::min(lo_x, x);
    lo_y = std::min(lo_y, y);
    hi_x = std::max(hi_x, x);
    hi_y = std::max(hi_y, y);
  }
  void add(const euclid::Point& p) { add(p.x.to_double(), p.y.to_double()); }
};

// Liang-Barsky clip of p + t (q - p) to the box; t >= 0 for rays.
bool clip(const euclid::Line& l, const ViewBox& box, double& x1, double& y1, double& x2, double& y2) {
  const double px = l.p().x.to_double();
  const double py = l.p().y.to_double();
  const double dx = l.q().x.to_double() - px;
  const double dy = l.q().y.to_double() - py;
  double t0 = l.is_ray() ? 0.0 : -std::numeric_limits<double>::infinity();
  double t1 = std::numeric_limits<double>::infinity();
  const double p[4] = {-dx, dx, -dy, dy};
  const double q[4] = {px - box.min_x, box.max_x - px, py - box.min_y, box.max_y - py};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0) {
      if (q[i] < 0) return false;
      continue;
    }
    const double t = q[i] / p[i];
    if (p[i] < 0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
  }
  if (t0 > t1) return false;
  x1 = px + t0 * dx;
  y1 = py + t0 * dy;
  x2 = px + t1 * dx;
  y2 = py + t1 * dy;
  return true;
}

}  // namespace

std::string scene_svg(const script::Scene& scene) {
  Bounds bounds;
  for (const auto& o : scene.objects) {
    if (const auto* p = std::get_if<euclid::Point>(&o.value)) bounds.add(*p);
    if (const auto* s = std::get_if<euclid::Segment>(&o.value)) {
      bounds.add(s->a);
      bounds.add(s->b);
    }
    if (const auto* t = std::get_if<euclid::Triangle>(&o.value)) {
      for (const auto& v : t->vertices()) bounds.add(v);
    }
  }
  if (!std::isfinite(bounds.lo_x)) bounds.add(0, 0);
  const double margin = 0.15 * std::max({bounds.hi_x - bounds.lo_x, bounds.hi_y - bounds.lo_y, 1.0});
  const ViewBox box{bounds.lo_x - margin, bounds.lo_y - margin, bounds.hi_x + margin, bounds.hi_y + margin};
  SvgDocument doc(box, 800);

  for (const auto& o : scene.objects) {
    const std::string id = "obj-" + o.name;
    if (const auto* l = std::get_if<euclid::Line>(&o.value)) {
      double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
      if (clip(*l, box, x1, y1, x2, y2)) doc.segment(x1, y1, x2, y2, "aux", id);
    } else if (const auto* c = std::get_if<euclid::Circle>(&o.value)) {
      doc.circle(c->center().x, c->center().y, c->radius(), "aux", id);
    } else if (const auto* s = std::get_if<euclid::Segment>(&o.value)) {
      doc.segment(s->a.x, s->a.y, s->b.x, s->b.y, "segment", id);
    } else if (const auto* t = std::get_if<euclid::Triangle>(&o.value)) {
      std::vector<std::pair<Real, Real>> pts;
      for (const auto& v : t->vertices()) pts.emplace_back(v.x, v.y);
      doc.polygon(pts, "figure", id);
    }
  }
  for (const auto& o : scene.objects) {
    if (const auto* p = std::get_if<euclid::Point>(&o.value)) doc.point(p->x, p->y, o.name);
  }
  return doc.str();
}

int cmd_solve(unsigned digits, bool json, std::ostream& out) {
  const SolutionReport report = solution_report(digits);
  out << (json ? render_json(report) : render_text(report));
  return Success;
}

int cmd_verify(long bits, const std::vector<std::string>& mutations, std::ostream& out, std::ostream& err) {
  GoldenConstants constants = GoldenConstants::defaults();
  for (const auto& m : mutations) {
    try {
      constants.apply(m);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return UsageError;
    }
  }
  const auto results = verify_identities(constants, bits);
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "\n";
    passed += r.passed ? 1 : 0;
  }
  out << passed << "/" << results.size() << " identities hold\n";
  return passed == results.size() ? Success : VerificationFailed;
}

int cmd_construct(const std::string& file, const std::optional<std::string>& svg, unsigned digits, std::ostream& out,
                  std::ostream& err) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << file << "\n";
    return UsageError;
  }
  std::ostringstream text;
  text << in.rdbuf();

  script::Scene scene;
  try {
    scene = script::execute(script::parse(text.str()));
  } catch (const script::SyntaxError& e) {
    err << file << ": " << e.what() << "\n";
    return UsageError;
  } catch (const script::CheckError& e) {
    for (const auto& d : e.diagnostics()) err << file << ": " << format(d) << "\n";
    return UsageError;
  } catch (const script::GeometryError& e) {
    err << file << ": " << e.what() << "\n";
    return GeometryFailure;
  }

  out << "objects:\n";
  for (const auto& o : scene.objects) {
    std::string line = "  " + pad(o.name, 6) + pad(script::to_string(o.kind), 9);
    if (const auto* p = std::get_if<euclid::Point>(&o.value)) {
      line += "(" + p->x.to_decimal(digits) + ", " + p->y.to_decimal(digits) + ")";
    } else if (const auto* s = std::get_if<euclid::Segment>(&o.value)) {
      line += "length " + s->length().to_decimal(digits);
    } else if (const auto* x = std::get_if<Real>(&o.value)) {
      line += x->to_decimal(digits);
    } else if (const auto* c = std::get_if<euclid::Circle>(&o.value)) {
      line += "radius " + c->radius().to_decimal(digits);
    } else if (const auto* t = std::get_if<euclid::Triangle>(&o.value)) {
      const auto sides = t->sides();
      line += "sides " + sides[0].to_decimal(digits) + ", " + sides[1].to_decimal(digits) + ", " +
              sides[2].to_decimal(digits);
    }
    out << line << "\n";
  }
  out << "assertions:\n";
  for (const auto& a : scene.assertions) {
    out << "  " << (a.passed ? "PASS  " : "FAIL  ") << a.name << ": " << a.relation << "\n";
  }
  if (svg && !write_file(*svg, scene_svg(scene), err)) return UsageError;
  return scene.all_passed() ? Success : VerificationFailed;
}

int cmd_roots(const std::vector<std::string>& coefficients, std::ostream& out, std::ostream& err) {
  std::vector<Rational> coeffs;
  for (const auto& arg : coefficients) {
    std::istringstream words(arg);
    std::string w;
    while (words >> w) {
      try {
        coeffs.push_back(Rational::parse(w));
      } catch (const exact::ArithmeticError&) {
        err << "error: malformed coefficient '" << w << "'\n";
        return UsageError;
      }
    }
  }
  if (coeffs.empty() || coeffs.front().is_zero()) {
    err << "error: the leading coefficient must be nonzero\n";
    return UsageError;
  }
  const auto p = poly::RationalPolynomial::from_highest_first(coeffs);
  const auto isolation = poly::isolate_real_roots(p);
  const auto exact_roots = poly::rational_roots(p);
  const auto sqf = poly::square_free_part(p);

  out << "polynomial: " << p.to_string() << "\n";
  out << isolation.intervals.size() << " distinct real root" << (isolation.intervals.size() == 1 ? "" : "s") << "\n";
  for (const auto& iv : isolation.intervals) {
    std::string decimal;
    bool exact_root = iv.exact;
    Rational value = iv.lo;
    for (const auto& r : exact_roots) {
      if (iv.lo <= r && r <= iv.hi) {
        exact_root = true;
        value = r;
      }
    }
    if (exact_root) {
      decimal = Real(value).to_decimal(12);
    } else {
      // Refine until both ends round to the same twelve-digit decimal.
      poly::IsolatingInterval fine = iv;
      Rational width(1, 1000000);
      for (;;) {
        fine = poly::refine_root(sqf, fine, width);
        const std::string lo = Real(fine.lo).to_decimal(12);
        if (fine.exact || lo == Real(fine.hi).to_decimal(12)) {
          decimal = lo;
          break;
        }
        width = width * Rational(1, 1024);
      }
    }
    const std::string interval =
        exact_root ? "[" + value.to_string() + "]" : "(" + iv.lo.to_string() + ", " + iv.hi.to_string() + ")";
    out << "  " << pad(interval, 24) << decimal << (exact_root ? "  exact" : "") << "\n";
  }
  return Success;
}

int cmd_figure1(const std::string& svg, int samples, std::ostream& out, std::ostream& err) {
  if (!write_file(svg, figure1_svg(samples), err)) return UsageError;
  out << "wrote " << svg << "\n";
  return Success;
}

int cmd_min_perimeter(double radius, double tol, std::ostream& out, std::ostream& err) {
  if (!std::isfinite(radius) || radius <= 0) {
    err << "error: radius must be positive\n";
    return UsageError;
  }
  conics::CircumscribedTriangle t;
  try {
    t = conics::min_perimeter_isosceles_circumscribing_semicircle(radius, tol);
  } catch (const conics::OptimizationError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == conics::OptimizationErrorKind::NoConvergence ? static_cast<int>(GeometryFailure)
                                                                     : static_cast<int>(UsageError);
  }
  out << "radius r     " << fixed(radius, 12) << "\n";
  out << "half base h  " << fixed(t.half_base, 12) << "\n";
  out << "height d     " << fixed(t.height, 12) << "\n";
  out << "perimeter    " << fixed(t.perimeter, 12) << "\n";
  out << "iterations   " << t.iterations << "\n";

  const double golden_radius = (Real(2) / exact::phi()).to_double();
  if (std::fabs(radius - golden_radius) <= 1e-12) {
    out << "r = 2/phi: compared with the exact triangle AF2C\n";
    const std::tuple<const char*, const char*, double> rows[] = {
        {"h", "2/sqrt(phi)", t.half_base}, {"d", "2", t.height}, {"perimeter", "4*phi*sqrt(phi)", t.perimeter}};
    for (const auto& [label, form, got] : rows) {
      const std::string exact_decimal = evaluate_form(form).to_decimal(12);
      double reference = 0;
      std::from_chars(exact_decimal.data(), exact_decimal.data() + exact_decimal.size(), reference);
      const double diff = std::fabs(got - reference);
      out << "  " << pad(label, 11) << pad(form, 17) << exact_decimal << "  |diff| " << scientific(diff) << "\n";
    }
  }
  return Success;
}

}  // namespace golden::cli
