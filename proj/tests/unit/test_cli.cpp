#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "flatcheck/cli.hpp"
#include "flatcheck/errors.hpp"
#include "flatcheck/groebner.hpp"
#include "flatcheck/parser.hpp"

using namespace flatcheck;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json report(std::vector<std::string> args) {
  args.push_back("--json");
  auto r = invoke(args);
  INFO(r.err);
  return json::parse(r.out);
}

bool same_problem(const ProblemFile& a, const ProblemFile& b) {
  if (!(*a.universe == *b.universe) || a.flags != b.flags || a.ring != b.ring) return false;
  auto same = [](const auto& x, const auto& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || submodule_equal(*x, embed(*y, x->universe()));
  };
  if (!same(a.base_ideal, b.base_ideal) || !same(a.source_ideal, b.source_ideal) || !same(a.module, b.module))
    return false;
  if (a.map.has_value() != b.map.has_value()) return false;
  if (a.map)
    for (std::size_t i = 0; i < a.map->size(); ++i)
      if ((*a.map)[i] != embed((*b.map)[i], a.universe)) return false;
  return true;
}

}  // namespace

TEST_CASE("polynomial grammar") {
  auto u = VarUniverse::make({{"y1", VarRole::Base}, {"y2", VarRole::Base}});
  auto f = parse_polynomial("y1 + (1/2)y2^2", u);
  CHECK(f.coefficient(Monomial({0, 2})) == Rational(1, 2));
  CHECK(parse_polynomial("2 y1 y2", u) == parse_polynomial("2*y1*y2", u));
  CHECK(parse_polynomial("-(y1 - y2)^2", u) == parse_polynomial("-y1^2 + 2*y1*y2 - y2^2", u));
  CHECK(parse_polynomial("y1/3", u) == parse_polynomial("(1/3)*y1", u));
  CHECK_THROWS_AS(parse_polynomial("y1/y2", u), ParseError);
  CHECK_THROWS_AS(parse_polynomial("y1/0", u), ParseError);
  CHECK_THROWS_AS(parse_polynomial("y3", u), ParseError);
  CHECK_THROWS_AS(parse_polynomial("y1^", u), ParseError);
}

TEST_CASE("problem files: blocks and errors") {
  auto empty = parse_problem("ring base y1; fiber x1; module q=1 gens [ ];");
  REQUIRE(empty.module);
  CHECK(empty.module->generators().empty());

  auto rank2 = parse_problem("ring base y1; fiber x1; module q=2 gens [ [x1, 0], [0, y1] ];");
  CHECK(rank2.module->rank() == 2);
  CHECK_THROWS_AS(parse_problem("ring base y1; fiber x1; module q=2 gens [ x1 ];"), ParseError);

  try {
    parse_problem("ring base y1 y2;\nfiber x1; module q=1 gens [ w ];");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 29);
  }
  CHECK_THROWS_AS(parse_problem("ring base y1; base y2;"), ParseError);
  CHECK_THROWS_AS(parse_problem("ring base y1 y1;"), ParseError);
  CHECK_THROWS_AS(parse_problem("ring base y1; flags make-it-flat;"), ParseError);
  CHECK_THROWS_AS(parse_problem("module q=1 gens [ x ];"), ParseError);
  CHECK(parse_problem("# only a comment\nring fiber x;").universe->size() == 1);
}

TEST_CASE("every fixture prints and parses back to the same problem") {
  for (const auto& entry : std::filesystem::directory_iterator(FIXTURE_DIR)) {
    if (entry.path().extension() != ".prob") continue;
    INFO(entry.path().filename().string());
    auto first = parse_problem(slurp(entry.path().string()));
    auto text = print_problem(first);
    auto second = parse_problem(text);
    CHECK(same_problem(first, second));
    CHECK(print_problem(second) == text);
  }
}

TEST_CASE("exit codes") {
  CHECK(invoke({"flat", fixture("free.prob")}).code == cli::kOk);
  CHECK(invoke({"flat", fixture("chart.prob")}).code == cli::kNegative);
  CHECK(invoke({"flat", fixture("cusp_point_noflags.prob")}).code == cli::kWeak);
  CHECK(invoke({"flat", fixture("cusp_point_noflags.prob"), "--assume-domain", "--assume-embedding"}).code ==
        cli::kNegative);
  CHECK(invoke({"flat", fixture("line_swap.prob"), "--chart", "2"}).code == cli::kImproper);
  CHECK(invoke({"open", fixture("open_identity.prob")}).code == cli::kOk);
  CHECK(invoke({"open", fixture("open_line.prob")}).code == cli::kNegative);
  CHECK(invoke({"gb", fixture("circle_gb.prob")}).code == cli::kOk);
  CHECK(invoke({"flat", fixture("does_not_exist.prob")}).code == cli::kUsage);
  CHECK(invoke({}).code == cli::kUsage);
  CHECK(invoke({"flat"}).code == cli::kUsage);
  CHECK(invoke({"gb", fixture("circle_gb.prob"), "--order", "weird"}).code == cli::kUsage);
  CHECK(invoke({"flat", fixture("union_graph.prob"), "--timeout", "0.000001"}).code == cli::kTimeout);
}

TEST_CASE("parse errors report a position") {
  auto path = std::filesystem::temp_directory_path() / "flatcheck_bad.prob";
  {
    std::ofstream out(path);
    out << "ring base y1;\nfiber x1; module q=1 gens [ x1 + ];\n";
  }
  auto r = invoke({"flat", path.string()});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("line 2") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("json reports") {
  auto gb = report({"gb", fixture("circle_gb.prob"), "--order", "grevlex"});
  CHECK(gb["status"] == "OK");
  CHECK(gb["result"].size() == 2);

  auto st = report({"strict-transform", fixture("cusp.prob")});
  REQUIRE(st["result"].size() == 1);
  CHECK(st["result"][0] == "z1^2 - z2");
  CHECK(st["exponent"] == 2);
  CHECK(st["proper_at_origin"] == true);

  auto col = report({"colon", fixture("colon.prob"), "--by", "x"});
  CHECK(col["result"].size() == 2);
  auto sat = report({"saturate", fixture("colon.prob"), "--by", "x"});
  CHECK(sat["exponent"] == 2);
  auto inter = report({"intersect", fixture("intersect_a.prob"), fixture("intersect_b.prob")});
  CHECK(inter["result"] == json::array({"x*y"}));

  auto flat = report({"flat", fixture("chart.prob")});
  CHECK(flat["status"] == "NotFlat");
  CHECK(flat["stats"]["groebner_calls"].get<int>() > 0);
  CHECK(flat["assumptions"].is_array());
}

TEST_CASE("reported witness parses back to a verified element") {
  auto r = report({"flat", fixture("union_graph.prob")});
  REQUIRE(r["status"] == "NotFlat");
  std::vector<VarUniverse::Variable> vars;
  for (const auto& v : r["variables"]) vars.push_back({v.get<std::string>(), VarRole::Fiber});
  auto u = VarUniverse::make(vars);
  auto witness = parse_polynomial(r["witness"].get<std::string>(), u);
  CHECK(witness == parse_polynomial("x6*y2 - x5", u));
  CHECK(r["multiplier"] == "y3");
}

TEST_CASE("human summary") {
  auto r = invoke({"flat", fixture("skyscraper.prob")});
  CHECK(r.out.find("status: NotFlat") != std::string::npos);
  CHECK(r.out.find("witness: y1") != std::string::npos);
}
