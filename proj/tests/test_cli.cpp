#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "golden/cli/commands.hpp"
#include "golden/cli/svg.hpp"
#include "golden/cli/verify.hpp"

using golden::cli::run;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "golden_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

std::string asset(const std::string& name) { return (fs::path(GOLDEN_ASSET_DIR) / name).string(); }

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

// Value after a label in the min-perimeter report.
double field(const std::string& text, const std::string& label) {
  std::smatch m;
  REQUIRE(std::regex_search(text, m, std::regex(label + R"(\s+(-?[0-9.]+))")));
  return std::stod(m[1]);
}

std::string fixed12(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lf", v);
  return buf;
}

}  // namespace

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"solve", "--digits", "0"}).code == 2);
  CHECK(cli({"solve", "--digits", "1001"}).code == 2);
  CHECK(cli({"solve", "--digits", "seven"}).code == 2);
  CHECK(cli({"solve", "--bogus"}).code == 2);
  CHECK(cli({"figure1"}).code == 2);
  CHECK(cli({"figure1", "--svg", scratch("x.svg").string(), "--samples", "15"}).code == 2);
  const Result help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("min-perimeter") != std::string::npos);
  CHECK(help.out.find("--mutate") == std::string::npos);
}

TEST_CASE("solve") {
  const Result r = cli({"solve", "--digits", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2.0581710") != std::string::npos);
  CHECK(r.out.find("1.6180340") != std::string::npos);
  CHECK(r.out.find("0.4858683") != std::string::npos);
  CHECK(r.out.find("Q is the midpoint of HN: yes") != std::string::npos);

  // e1 to 40 digits, from an independent high-precision evaluation
  CHECK(cli({"solve", "--digits", "40"}).out.find("0.4858682717566456781828638758945325621925\n") != std::string::npos);
  const Result big = cli({"solve", "--digits", "1000"});
  CHECK(big.code == 0);
  CHECK(big.out.find("0.485868271756645678182863875894532562192485984002373010951738") != std::string::npos);
}

TEST_CASE("solve --json round-trips against the text report") {
  for (const char* digits : {"3", "12", "40"}) {
    const Result text = cli({"solve", "--digits", digits});
    const Result json = cli({"solve", "--digits", digits, "--json"});
    REQUIRE(json.code == 0);
    const auto j = nlohmann::json::parse(json.out);
    const std::vector<std::string> keys{"a", "e1", "e2", "on_oq", "oq_hq", "oq", "hq", "qn", "q_midpoint_hn"};
    CHECK(j.size() == keys.size());
    for (const auto& k : keys) CHECK(j.contains(k));
    CHECK(j["q_midpoint_hn"] == true);
    for (const auto& k : keys) {
      if (k == "q_midpoint_hn") continue;
      const std::string exact = j[k]["exact"];
      const std::string decimal = j[k]["decimal"];
      CHECK(text.out.find(exact) != std::string::npos);
      CHECK(text.out.find(decimal) != std::string::npos);
    }
    CHECK(j["e2"]["decimal"] == j["a"]["decimal"]);
    CHECK(j["hq"]["decimal"] == j["qn"]["decimal"]);
  }
}

TEST_CASE("verify and the mutation sentinel") {
  const Result ok = cli({"verify"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS  e1*e2 == 1") != std::string::npos);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(cli({"verify", "--bits", "512"}).code == 0);

  const Result broken = cli({"verify", "--mutate", "quartic.2=-3"});
  CHECK(broken.code == 1);
  CHECK(broken.out.find("FAIL  condition polynomial == (a^2 - 1)(a^4 - 4a^2 - 1)") != std::string::npos);
  CHECK(cli({"verify", "--mutate", "phi.radicand=6"}).code == 1);
  CHECK(cli({"verify", "--mutate", "phi.denominator=0"}).code == 1);
  CHECK(cli({"verify", "--mutate", "no.such=1"}).code == 2);
  CHECK(cli({"verify", "--mutate", "quartic.2"}).code == 2);
  CHECK(cli({"verify", "--mutate", "quartic.2=x"}).code == 2);
}

TEST_CASE("construct") {
  const fs::path svg = scratch("fig2.svg");
  const Result fig2 = cli({"construct", asset("fig2.gcs"), "--svg", svg.string()});
  CHECK(fig2.code == 0);
  CHECK(fig2.out.find("PASS  FC: equal(dist(F, C), phi * sqrt(phi))") != std::string::npos);
  const std::string doc = slurp(svg);
  CHECK(doc.rfind("<?xml", 0) == 0);
  CHECK(count(doc, "class=\"point\"") == 6);

  const Result fig3 = cli({"construct", asset("fig3.gcs")});
  CHECK(fig3.code == 0);
  CHECK(fig3.out.find("PASS  BE: equal(dist(B, E), sqrt(2 * phi))") != std::string::npos);

  const Result syntax = cli({"construct", write("broken.gcs", "point A = (0, 0)\npoint B = (1,\n").string()});
  CHECK(syntax.code == 2);
  CHECK(syntax.err.find("line 2, column") != std::string::npos);

  const Result undeclared = cli({"construct", write("undeclared.gcs", "point A = midpoint(B, B)\n").string()});
  CHECK(undeclared.code == 2);
  CHECK(undeclared.err.find("UnknownIdentifier") != std::string::npos);

  const Result degenerate = cli({"construct", write("disjoint.gcs",
                                                   "point A = (0, 0)\npoint B = (5, 0)\n"
                                                   "point X = intersect(circle(A, 1), circle(B, 1), 1)\n")
                                                 .string()});
  CHECK(degenerate.code == 3);
  CHECK(degenerate.err.find("NoIntersection") != std::string::npos);
  CHECK(degenerate.err.find("line 3, column 1") != std::string::npos);

  const Result failing = cli({"construct", write("false.gcs", "assert no: equal(phi, 1.618)\n").string()});
  CHECK(failing.code == 1);
  CHECK(failing.out.find("FAIL  no") != std::string::npos);

  CHECK(cli({"construct", scratch("missing.gcs").string()}).code == 2);
  CHECK(cli({"construct", asset("fig3.gcs"), "--svg", "/nonexistent-dir/out.svg"}).code == 2);
}

TEST_CASE("roots") {
  const Result sextic = cli({"roots", "1", "0", "-5", "0", "3", "0", "1"});
  CHECK(sextic.code == 0);
  // independent value: the biquadratic root sqrt(2 + sqrt(5))
  const std::string big = fixed12(std::sqrt(2 + std::sqrt(5.0L)));
  CHECK(big == "2.058171027271");
  CHECK(sextic.out.find("4 distinct real roots") != std::string::npos);
  CHECK(sextic.out.find("-" + big) != std::string::npos);
  CHECK(sextic.out.find(" " + big) != std::string::npos);
  CHECK(sextic.out.find("-1.000000000000  exact") != std::string::npos);
  CHECK(sextic.out.find(" 1.000000000000  exact") != std::string::npos);

  const Result quadratic = cli({"roots", "1 0 -1"});
  CHECK(quadratic.code == 0);
  CHECK(quadratic.out.find("2 distinct real roots") != std::string::npos);

  const Result linear = cli({"roots", "1", "1"});
  CHECK(linear.out.find("1 distinct real root\n") != std::string::npos);
  CHECK(linear.out.find("-1.000000000000") != std::string::npos);

  const Result third = cli({"roots", "3", "-1"});
  CHECK(third.out.find("0.333333333333") != std::string::npos);
  CHECK(cli({"roots", "1", "0", "-2"}).out.find("1.414213562373") != std::string::npos);
  CHECK(cli({"roots", "1", "0", "1"}).out.find("0 distinct real roots") != std::string::npos);

  CHECK(cli({"roots", "0", "1"}).code == 2);
  CHECK(cli({"roots", "1", "two"}).code == 2);
  CHECK(cli({"roots"}).code == 2);
}

TEST_CASE("figure1") {
  const fs::path a = scratch("f1a.svg");
  const fs::path b = scratch("f1b.svg");
  const fs::path small = scratch("f1small.svg");
  REQUIRE(cli({"figure1", "--svg", a.string()}).code == 0);
  REQUIRE(cli({"figure1", "--svg", b.string()}).code == 0);
  REQUIRE(cli({"figure1", "--svg", small.string(), "--samples", "16"}).code == 0);
  const std::string doc = slurp(a);
  CHECK(doc == slurp(b));
  CHECK(count(doc, "<polyline") == 2);
  CHECK(count(doc, "class=\"point\"") == 10);
  CHECK(count(doc, "id=\"directrix\"") == 1);
  CHECK(count(doc, "id=\"seg-PN\"") == 1);
  CHECK(count(doc, "id=\"seg-KF2\"") == 1);
  for (const char* label : {"O", "F1", "F2", "K", "L", "M", "N", "P", "Q", "H"}) {
    CHECK(count(doc, std::string("id=\"pt-") + label + "\"") == 1);
  }

  const auto markers = [](const std::string& s) {
    std::string out;
    std::istringstream lines(s);
    for (std::string line; std::getline(lines, line);) {
      if (line.find("class=\"point\"") != std::string::npos) out += line + "\n";
    }
    return out;
  };
  CHECK(markers(doc) == markers(slurp(small)));
  CHECK(doc != slurp(small));
  // P at (sqrt(phi), sqrt(2)); SVG y points down
  CHECK(doc.find("cx=\"1.272020\" cy=\"-1.414214\"") != std::string::npos);
  CHECK(cli({"figure1", "--svg", "/nonexistent-dir/f.svg"}).code == 2);
}

TEST_CASE("min-perimeter") {
  const Result r = cli({"min-perimeter", "--radius", "1.2360679775"});
  CHECK(r.code == 0);
  const long double phi = (1 + std::sqrt(5.0L)) / 2;
  CHECK(std::fabs(field(r.out, "half base h") - static_cast<double>(2 / std::sqrt(phi))) < 1e-9);
  CHECK(std::fabs(field(r.out, "height d") - 2.0) < 1e-9);
  CHECK(std::fabs(field(r.out, "perimeter") - static_cast<double>(4 * phi * std::sqrt(phi))) < 1e-9);
  CHECK(r.out.find("4*phi*sqrt(phi)") != std::string::npos);

  const Result plain = cli({"min-perimeter", "--radius", "1"});
  CHECK(plain.code == 0);
  CHECK(plain.out.find("AF2C") == std::string::npos);

  CHECK(cli({"min-perimeter", "--radius", "-1"}).code == 2);
  CHECK(cli({"min-perimeter", "--radius", "0"}).code == 2);
  CHECK(cli({"min-perimeter", "--radius", "1", "--tol", "0"}).code == 2);
  CHECK(cli({"min-perimeter"}).code == 2);
}

TEST_CASE("svg coordinates") {
  using golden::cli::format_coordinate;
  CHECK(format_coordinate(0.0) == "0.000000");
  CHECK(format_coordinate(-0.0) == "0.000000");
  CHECK(format_coordinate(-1e-9) == "0.000000");
  CHECK(format_coordinate(1.25) == "1.250000");
  CHECK(format_coordinate(-2.5) == "-2.500000");
  CHECK(format_coordinate(golden::exact::phi()) == "1.618034");
  CHECK(format_coordinate(-golden::exact::Real(golden::exact::Rational(1, 10000000))) == "0.000000");
}
