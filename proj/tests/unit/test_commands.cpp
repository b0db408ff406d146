#include <doctest.h>

#include "ncgb/commands.hpp"

using namespace ncgb;

namespace {

RunConfig config(const std::string& command, int n, std::optional<int> bound = std::nullopt) {
  RunConfig c;
  c.command = command;
  c.n = n;
  c.bound = bound;
  c.jobs = 2;
  return c;
}

}  // namespace

TEST_CASE("RunConfig validation") {
  RunConfig c = config("verify-gamma3", 0);
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = config("verify-gamma3", 3, 0);
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = config("verify-gamma3", 3, 4);
  CHECK_NOTHROW(c.validate());
  c.jobs = 0;
  CHECK(c.effective_jobs() >= 1);
}

TEST_CASE("verify-gamma3") {
  auto r = cmd_verify_gamma3(config("verify-gamma3", 3, 6));
  CHECK(r.exit_code == 0);
  CHECK(r.report["verdict"] == "pass");
  CHECK(r.report["sbasis"]["leading_words_equal"] == true);

  auto two = cmd_verify_gamma3(config("verify-gamma3", 2, 4));
  CHECK(two.exit_code == 0);
  CHECK(two.report["notes"].dump().find("h family is empty") != std::string::npos);

  auto cfg = config("verify-gamma3", 3, 6);
  cfg.drop = {"h"};
  auto dropped = cmd_verify_gamma3(cfg);
  CHECK(dropped.exit_code != 0);
  CHECK(dropped.report["verdict"] == "fail");
  bool row = false;
  for (const auto& r : dropped.report["rows"])
    if (r["multidegree"] == nlohmann::json::array({1, 1, 2}) && r["normal"] != r["reference"]) row = true;
  CHECK(row);
}

TEST_CASE("verify-tideal") {
  auto r = cmd_verify_tideal(config("verify-tideal", 3, 8));
  CHECK(r.exit_code == 0);
  CHECK(r.report["minimality"]["redundant"].empty());
  auto two = cmd_verify_tideal(config("verify-tideal", 2, 8));
  CHECK(two.exit_code == 0);
  CHECK(two.report["generators"] == 3);
  auto cfg = config("verify-tideal", 3, 8);
  cfg.drop = {"t[2,1]"};
  CHECK(cmd_verify_tideal(cfg).exit_code != 0);
  cfg.drop = {"nothing[9,9]"};
  CHECK_THROWS_AS(cmd_verify_tideal(cfg), std::invalid_argument);
}

TEST_CASE("reduce") {
  auto cfg = config("reduce", 2);
  cfg.inputs = {"[[x2,x1],x1]"};
  auto r = cmd_reduce(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.report["normal_form"] == "0");

  cfg = config("reduce", 2, 6);
  cfg.basis = "tideal";
  cfg.inputs = {"(x2*x1)^2-(x1*x2)^2"};
  CHECK(cmd_reduce(cfg).report["normal_form"] != "0");

  cfg = config("reduce", 3, 6);
  cfg.basis = "tideal";
  cfg.inputs = {"[x1,x2]*x3-x3*[x1,x2]"};
  CHECK(cmd_reduce(cfg).report["normal_form"] == "0");
}

TEST_CASE("bijection") {
  auto cfg = config("bijection", 6);
  cfg.inputs = {"1,2,2,2,3,4,5,6,(2,1),(2,1),(3,1),(3,2),(5,2),(5,3),(6,4)"};
  auto r = cmd_bijection(cfg);
  CHECK(r.report["output"] == "1,2,1,2,1,2,2,2,3,1,3,2,3,4,5,2,5,3,5,6,4,6");

  cfg.direction = "theta";
  cfg.inputs = {"1,2,1,2,1,2,2,2,3,1,3,2,3,4,5,2,5,3,5,6,4,6"};
  r = cmd_bijection(cfg);
  CHECK(r.report["output"] == "1,2,2,2,3,4,5,6,(2,1),(2,1),(3,1),(3,2),(5,2),(5,3),(6,4)");
  CHECK(r.report["factorization"] == "x1(x2x1)^2x2^3(x3x1)(x3x2)x3x4(x5x2)(x5x3)x5(x6x4)x6");

  cfg.direction = "psi";
  cfg.inputs = {""};
  CHECK(cmd_bijection(cfg).report["output"] == "");

  auto rt = config("bijection", 3, 6);
  rt.direction = "roundtrip";
  auto round = cmd_bijection(rt);
  CHECK(round.exit_code == 0);
  CHECK(round.report["roundtrip"]["failures"].empty());
}

TEST_CASE("grassmann-check and complete") {
  auto g = cmd_grassmann_check(config("grassmann-check", 2));
  CHECK(g.exit_code == 0);
  CHECK(g.report["witness"] == "-4*e1*e2");

  auto c = cmd_complete(config("complete", 3, 4));
  CHECK(c.exit_code == 0);
  CHECK(c.report["verdict"] == "pass");
}

TEST_CASE("normal-words") {
  auto cfg = config("normal-words", 2, 3);
  auto r = cmd_normal_words(cfg);
  CHECK(r.report["counts_by_degree"] == nlohmann::json::array({1, 2, 4, 6}));
}

TEST_CASE("exit code follows the verdict and reports are deterministic") {
  auto a = cmd_verify_gamma3(config("verify-gamma3", 3, 5));
  auto b = cmd_verify_gamma3(config("verify-gamma3", 3, 5));
  CHECK(a.report.dump() == b.report.dump());
  CHECK((a.exit_code == 0) == (a.report["verdict"] == "pass"));
}

TEST_CASE("parse_sequence") {
  CHECK(parse_sequence("1,2,1") == Word{1, 2, 1});
  CHECK(parse_sequence("1 2 1") == Word{1, 2, 1});
  CHECK(parse_sequence("") == Word{});
  CHECK_THROWS(parse_sequence("1,a"));
}
