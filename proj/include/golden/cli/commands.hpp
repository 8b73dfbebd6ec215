#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "golden/script/interpreter.hpp"

namespace golden::cli {

enum ExitCode : int { Success = 0, VerificationFailed = 1, UsageError = 2, GeometryFailure = 3 };

struct ReportRow {
  std::string key;
  std::string label;
  /// Closed form, in the scalar syntax of the construction scripts.
  std::string exact;
  std::string decimal;
};

struct SolutionReport {
  std::vector<ReportRow> rows;
  bool q_midpoint_hn = false;
  std::vector<std::string> rejected;
};

/// Solved conic problem. Each closed form is re-evaluated and compared
/// exactly with the computed value; a mismatch throws std::logic_error.
SolutionReport solution_report(unsigned digits);
std::string render_text(const SolutionReport& report);
std::string render_json(const SolutionReport& report);

std::string figure1_svg(int samples);
std::string scene_svg(const script::Scene& scene);

int cmd_solve(unsigned digits, bool json, std::ostream& out);
int cmd_verify(long bits, const std::vector<std::string>& mutations, std::ostream& out, std::ostream& err);
int cmd_construct(const std::string& file, const std::optional<std::string>& svg, unsigned digits, std::ostream& out,
                  std::ostream& err);
int cmd_roots(const std::vector<std::string>& coefficients, std::ostream& out, std::ostream& err);
int cmd_figure1(const std::string& svg, int samples, std::ostream& out, std::ostream& err);
int cmd_min_perimeter(double radius, double tol, std::ostream& out, std::ostream& err);

/// Full command line without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace golden::cli
