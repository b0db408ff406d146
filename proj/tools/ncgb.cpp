// ncgb: verification workflows for noncommutative Groebner bases.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ncgb/commands.hpp"
#include "ncgb/parse.hpp"

namespace {

struct Flags {
  int vars = 3;
  int bound = 0;
  std::vector<std::string> drop;
  std::string semigroup;
  std::string out;
  int jobs = 0;
  std::string input;
};

// "p1; p2; p3" -> {"p1", "p2", "p3"}
std::vector<std::string> split_seed(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    std::string part = text.substr(start, end - start);
    if (part.find_first_not_of(" \t") != std::string::npos) out.push_back(part);
    start = end + 1;
  }
  return out;
}

void add_common(CLI::App* sub, Flags& f, bool with_drop) {
  sub->add_option("--vars", f.vars, "number of variables n")->check(CLI::Range(1, 255));
  sub->add_option("--bound", f.bound, "total degree bound")->check(CLI::PositiveNumber);
  if (with_drop) sub->add_option("--drop", f.drop, "remove a family (h, t, v'') or a member (t[2,1])");
  sub->add_option("--semigroup", f.semigroup, R"(semigroup JSON, e.g. {"kind":"order_preserving","k":3,"n":4})");
  sub->add_option("--out", f.out, "write the JSON report to this path");
  sub->add_option("--jobs", f.jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative Groebner bases for gamma3 and the Grassmann T-ideal"};
  app.require_subcommand(1);

  Flags f;
  ncgb::RunConfig cfg;

  auto* gamma3 = app.add_subcommand("verify-gamma3", "check the gamma3 family basis");
  add_common(gamma3, f, true);

  auto* tideal = app.add_subcommand("verify-tideal", "check the T-ideal family basis");
  add_common(tideal, f, true);

  auto* reduce = app.add_subcommand("reduce", "normal form of a polynomial");
  add_common(reduce, f, true);
  reduce->add_option("--basis", cfg.basis, "gamma3 or tideal")->check(CLI::IsMember({"gamma3", "tideal"}));
  reduce->add_option("polynomial", f.input, "e.g. \"[[x2,x1],x1]\"")->required();

  auto* normal = app.add_subcommand("normal-words", "count normal words per multidegree");
  add_common(normal, f, true);
  normal->add_option("--basis", cfg.basis, "gamma3 or tideal")->check(CLI::IsMember({"gamma3", "tideal"}));
  normal->add_flag("--list", cfg.list_words, "print the words as well");

  auto* bij = app.add_subcommand("bijection", "PBW index <-> normal word");
  add_common(bij, f, false);
  bij->add_option("--direction", cfg.direction, "psi, theta or roundtrip")
      ->check(CLI::IsMember({"psi", "theta", "roundtrip"}));
  bij->add_option("sequence", f.input, "e.g. \"1,2,(2,1)\" for psi or \"1,2,1\" for theta");

  auto* grass = app.add_subcommand("grassmann-check", "evaluate (x2x1)^2-(x1x2)^2 on the Grassmann algebra");
  add_common(grass, f, false);

  auto* complete = app.add_subcommand("complete", "degree-truncated completion of a seed");
  add_common(complete, f, false);
  complete->add_option("seed", f.input, "seed polynomials separated by ';' (default: all [[xi,xj],xk])");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.n = f.vars;
    if (f.bound > 0) cfg.bound = f.bound;
    cfg.drop = f.drop;
    cfg.out = f.out;
    cfg.jobs = f.jobs;
    if (cfg.command == "complete") cfg.inputs = split_seed(f.input);
    else if (cfg.command == "reduce" || !f.input.empty()) cfg.inputs = {f.input};
    if (!f.semigroup.empty()) cfg.semigroup = ncgb::semigroup_from_json(nlohmann::json::parse(f.semigroup));

    ncgb::CommandResult r = ncgb::run_command(cfg);
    std::cout << r.text;
    if (!cfg.out.empty()) {
      std::ofstream os(cfg.out);
      if (!os) {
        std::cerr << "error: cannot write " << cfg.out << '\n';
        return 2;
      }
      os << r.report.dump(2) << '\n';
    }
    return r.exit_code;
  } catch (const ncgb::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "bad --semigroup: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}
