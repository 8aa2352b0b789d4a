#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "gbsect/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gbsect::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = GBSECT_TEST_DATA;

}  // namespace

TEST_CASE("basis") {
  const Run r = run({"basis", kData + "/paraboloid.sys", "--cleared"});
  CHECK(r.code == 0);
  CHECK(r.out == "b*x + a*y - a*b*z\n2*y^2 - 2*b*y*z + b^2*z^2 - b^2*z\n");
  const Run m = run({"basis", kData + "/quartic.sys"});
  CHECK(m.out == "x + z^3 + z - 3\ny - z^3 - 1\n");
  const Run inline_exprs = run({"basis", "--vars", "x,y,z", "x + y*z + y - z^4 - 4", "y - z^3 - 1", "--order", "lex"});
  CHECK(inline_exprs.out == m.out);
  CHECK(run({"basis", "--vars", "x", "0"}).out == "0\n");
}

TEST_CASE("json schema") {
  const Run r = run({"basis", kData + "/paraboloid.sys", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == "lex");
  CHECK(j["vars"] == nlohmann::json::array({"x", "y", "z"}));
  CHECK(j["params"] == nlohmann::json::array({"a", "b"}));
  CHECK(j["basis"][0]["monic"] == "x + a/b*y - a*z");
  CHECK(j["basis"][1]["cleared"] == "2*y^2 - 2*b*y*z + b^2*z^2 - b^2*z");

  const auto p = nlohmann::json::parse(run({"planar", kData + "/quartic.sys", "--json"}).out);
  CHECK(p["planes"][0] == nlohmann::json({{"A", "1"}, {"B", "1"}, {"C", "1"}, {"D", "-4"}}));
}

TEST_CASE("planar") {
  CHECK(run({"planar", kData + "/quartic.sys"}).out == "x + y + z - 4 = 0\n");
  CHECK(run({"planar", kData + "/paraboloid.sys"}).out == "b*x + a*y - a*b*z = 0\n");
  CHECK(run({"planar", kData + "/paraboloid.sys", "--monic"}).out == "x + a/b*y - a*z = 0\n");
  const Run none = run({"planar", "--vars", "x,y,z", "x^2 + y^2 - z"});
  CHECK(none.code == 0);
  CHECK(none.out == "none\n");
  CHECK(run({"planar", "--vars", "x,y,z", "x - 1", "x"}).out == "empty-variety\n");
}

TEST_CASE("reduce") {
  const Run r = run({"reduce", "--vars", "x,y", "x*y - 1", "y^2 - 1", "--target", "x^2*y + x*y^2 + y^2"});
  CHECK(r.code == 0);
  // The target is reduced by the reduced basis {x - y, y^2 - 1}.
  CHECK(r.out.rfind("remainder: 2*y + 1\n", 0) == 0);
  const Run g = run({"reduce", kData + "/quartic.sys", "--target", "x + y + z - 4"});
  CHECK(g.out == "remainder: 0\ncofactor of x + z^3 + z - 3: 1\ncofactor of y - z^3 - 1: 1\n");
}

TEST_CASE("conoid commands") {
  const Run s = run({"conoid", "section", "--axis", "y", "--value", "0"});
  CHECK(s.code == 0);
  CHECK(s.out.find("kind: line-pair\n") != std::string::npos);
  CHECK(s.out.find("line: x - 2*z + 2 = 0\n") != std::string::npos);
  const Run bad = run({"conoid", "section", "--axis", "y", "--value", "0", "--a", "1"});
  CHECK(bad.code == 1);
  const Run conic = run({"conoid", "conic-analysis"});
  CHECK(conic.out.find("solutions are exactly the families: yes\n") != std::string::npos);
  const Run v = run({"conoid", "verdict"});
  CHECK(v.code == 0);
  const std::string tail = "conclusion: no plane section is a non-degenerate conic\n";
  REQUIRE(v.out.size() > tail.size());
  CHECK(v.out.substr(v.out.size() - tail.size()) == tail);
  CHECK(run({"conoid", "verdict"}).out == v.out);
  const auto j = nlohmann::json::parse(run({"conoid", "verdict", "--json"}).out);
  CHECK(j["no_nondegenerate_conic"] == true);
}

TEST_CASE("errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"basis", "/nonexistent.sys"}).code == 1);
  const Run parse = run({"basis", "--vars", "x,y", "2x"});
  CHECK(parse.code == 1);
  CHECK(parse.err.find("implicit multiplication") != std::string::npos);
  CHECK(run({"basis", "--vars", "x", "x", "--order", "grevlex"}).code == 1);
  CHECK(run({"basis", "--vars", "x", "x", "--monic", "--cleared"}).code == 1);
  CHECK(run({"reduce", "--vars", "x", "x"}).code == 1);
  CHECK(run({"planar", "--vars", "x,y", "x"}).code == 1);
  CHECK(run({"basis", "--help"}).code == 0);
}
