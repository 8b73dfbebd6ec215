#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "golden/cli/commands.hpp"

namespace golden::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of a golden-ratio conic problem and two ruler-and-compass constructions", "golden"};
  app.require_subcommand(1);

  unsigned digits = 12;
  bool json = false;
  auto* solve = app.add_subcommand("solve", "Solve the coupled conic problem and print exact and decimal values");
  solve->add_option("--digits", digits, "Fractional digits, 1 to 1000")->check(CLI::Range(1u, 1000u));
  solve->add_flag("--json", json, "Print a JSON object");

  long bits = 128;
  std::vector<std::string> mutations;
  auto* verify = app.add_subcommand("verify", "Check every exact identity; exit 1 if any fails");
  verify->add_option("--bits", bits, "Starting precision for sign decisions")->check(CLI::Range(2L, 1L << 20));
  verify->add_option("--mutate", mutations, "name=value override of a verification constant")->group("");

  std::string file;
  std::optional<std::string> svg;
  unsigned construct_digits = 12;
  auto* construct = app.add_subcommand("construct", "Run a construction script");
  construct->add_option("file", file, "Script (.gcs)")->required();
  construct->add_option("--svg", svg, "Write the scene as SVG");
  construct->add_option("--digits", construct_digits, "Fractional digits, 1 to 1000")->check(CLI::Range(1u, 1000u));

  std::vector<std::string> coefficients;
  auto* roots = app.add_subcommand("roots", "Isolate the real roots of a rational polynomial");
  roots->add_option("coefficients", coefficients, "Coefficients, highest degree first")->required();

  std::string figure_svg;
  int samples = 512;
  auto* figure1 = app.add_subcommand("figure1", "Draw the solved conic scene");
  figure1->add_option("--svg", figure_svg, "Output file")->required();
  figure1->add_option("--samples", samples, "Curve samples, at least 16")->check(CLI::Range(16, 1 << 20));

  double radius = 0;
  double tol = 1e-10;
  auto* perimeter = app.add_subcommand("min-perimeter", "Smallest isosceles triangle around a semicircle");
  perimeter->add_option("--radius", radius, "Semicircle radius")->required();
  perimeter->add_option("--tol", tol, "Tolerance on the half base");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? static_cast<int>(Success) : static_cast<int>(UsageError);
  }

  if (solve->parsed()) return cmd_solve(digits, json, out);
  if (verify->parsed()) return cmd_verify(bits, mutations, out, err);
  if (construct->parsed()) return cmd_construct(file, svg, construct_digits, out, err);
  if (roots->parsed()) return cmd_roots(coefficients, out, err);
  if (figure1->parsed()) return cmd_figure1(figure_svg, samples, out, err);
  return cmd_min_perimeter(radius, tol, out, err);
}

}  // namespace golden::cli
