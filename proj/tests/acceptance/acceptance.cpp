// Acceptance suite: one [PASS]/[FAIL] line per criterion.  All comparisons
// are exact (tolerance 0); the only pinned numeric parameters are the degree
// bounds, variable counts and RNG seeds printed on each line.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "ncgb/commands.hpp"
#include "ncgb/endo.hpp"
#include "ncgb/families.hpp"
#include "ncgb/grassmann.hpp"
#include "ncgb/groebner.hpp"
#include "ncgb/oracle.hpp"
#include "ncgb/parse.hpp"
#include "ncgb/pbw.hpp"
#include "ncgb/rewrite.hpp"

using namespace ncgb;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

int failures = 0;

void run(const char* id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %s %s: %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  std::fflush(stdout);
  failures += !o.ok;
}

Outcome ac1() {
  std::ostringstream os;
  bool ok = true;
  for (int n = 2; n <= 4; ++n) {
    const GeneratorSet G = gamma3_basis(n);
    auto comps = check_compositions(G, 6, jobs());
    auto dim = verify_by_dimension(G, pbw_count, static_cast<std::size_t>(n), 6, jobs());
    const bool pass = comps.passed() && dim.rows_match();
    ok = ok && pass;
    os << "n=" << n << " rows=" << dim.rows.size() << " bad=" << dim.failed_rows().size()
       << " compositions=" << comps.checked << " nonzero=" << comps.failed.size() << "; ";
  }
  return {ok, os.str() + "bound 6, exact"};
}

Outcome ac2() {
  std::ostringstream os;
  bool ok = true;
  for (int n = 3; n <= 4; ++n) {
    GeneratorSet orbit = enumerate_semigroup_images(OrderPreservingMaps{3, n}, sbasis_gamma3(), 4);
    const bool eq = leading_word_set(orbit) == leading_word_set(gamma3_basis(n));
    ok = ok && eq;
    os << "n=" << n << " orbit=" << orbit.size() << " basis=" << gamma3_basis(n).size()
       << (eq ? " equal; " : " differ; ");
  }
  return {ok, os.str() + "exact set equality"};
}

Outcome ac3() {
  const GeneratorSet G = tideal_basis(3, 8);
  auto dim = verify_by_dimension(G, grassmann_count, 3, 8, jobs());
  std::size_t redundant = 0;
  for (const auto& e : check_minimality(G, 3, 8)) redundant += e.redundant;
  std::size_t unbroken = 0;
  std::string first_unbroken;
  for (const auto& g : G) {
    GeneratorSet dropped = G.filter([&](const Generator& h) { return h.id != g.id; });
    auto r = verify_by_dimension(dropped, grassmann_count, 3, 8, jobs());
    if (r.rows_match()) {
      if (unbroken++ == 0) first_unbroken = g.label;
    }
  }
  std::ostringstream os;
  os << "generators=" << G.size() << " rows=" << dim.rows.size() << " bad=" << dim.failed_rows().size()
     << " redundant=" << redundant << " ablations=" << G.size() << " unbroken=" << unbroken;
  if (unbroken) os << " (first " << first_unbroken << ")";
  os << "; n=3 bound 8";
  return {dim.rows_match() && redundant == 0 && unbroken == 0, os.str()};
}

Outcome ac4() {
  bool ok = true;
  std::ostringstream os;
  for (int bound = 4; bound <= 12; ++bound) ok = ok && tideal_basis(2, bound).size() == 3;
  os << "|tideal_basis(2,4..12)|=3 " << (ok ? "yes" : "no");
  auto dim = verify_by_dimension(tideal_basis(2, 10), grassmann_count, 2, 10, jobs());
  ok = ok && dim.rows_match();
  os << "; dimension to degree 10 bad=" << dim.failed_rows().size();
  RunConfig cfg;
  cfg.command = "reduce";
  cfg.n = 2;
  cfg.bound = 6;
  cfg.basis = "tideal";
  cfg.inputs = {"(x2*x1)^2-(x1*x2)^2"};
  auto r = cmd_reduce(cfg);
  const std::string nf = r.report["normal_form"];
  ok = ok && nf != "0";
  GrassmannAssignment a{{1, GrassmannElement(1) + GrassmannElement::generator(1)},
                        {2, GrassmannElement(1) + GrassmannElement::generator(2)}};
  const GrassmannElement value = evaluate(parse_polynomial("(x2*x1)^2-(x1*x2)^2"), a);
  ok = ok && value == GrassmannElement::monomial(0b11, -4);
  os << "; reduce -> " << nf << "; E-value " << value.to_string();
  return {ok, os.str()};
}

Outcome ac5() {
  RunConfig cfg;
  cfg.command = "bijection";
  cfg.direction = "psi";
  cfg.n = 6;
  cfg.inputs = {"1,2,2,2,3,4,5,6,(2,1),(2,1),(3,1),(3,2),(5,2),(5,3),(6,4)"};
  const std::string psi_out = cmd_bijection(cfg).report["output"];
  const bool psi_ok = psi_out == "1,2,1,2,1,2,2,2,3,1,3,2,3,4,5,2,5,3,5,6,4,6";
  cfg.direction = "theta";
  cfg.inputs = {psi_out};
  auto t = cmd_bijection(cfg);
  const bool theta_ok = t.report["output"] == "1,2,2,2,3,4,5,6,(2,1),(2,1),(3,1),(3,2),(5,2),(5,3),(6,4)";
  const bool fact_ok = t.report["factorization"] == "x1(x2x1)^2x2^3(x3x1)(x3x2)x3x4(x5x2)(x5x3)x5(x6x4)x6";

  // Exhaustive: every admissible index maps to a normal word and back, and
  // every normal word maps to an index and back.
  std::size_t indices = 0, failures_seen = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& md : multidegrees_up_to(static_cast<std::size_t>(n), 10)) {
      if (n > 1 && md.exponents.back() == 0) continue;  // counted at smaller n
      for (const auto& u : pbw_basis(md)) {
        ++indices;
        if (theta(psi(u)) != u) ++failures_seen;
      }
    }
  RunConfig rt;
  rt.command = "bijection";
  rt.direction = "roundtrip";
  rt.n = 4;
  rt.bound = 10;
  auto round = cmd_bijection(rt);
  const bool round_ok = round.exit_code == 0;
  std::ostringstream os;
  os << "psi(u) " << (psi_ok ? "exact" : "differs") << "; theta " << (theta_ok ? "exact" : "differs")
     << "; factorization " << (fact_ok ? "exact" : "differs") << "; theta(psi(u))=u on " << indices
     << " indices, failures=" << failures_seen << "; psi(theta(w))=w on "
     << round.report["roundtrip"]["normal_words"].get<std::size_t>() << " normal words (n=4, degree<=10), "
     << (round_ok ? "no" : "some") << " failures";
  return {psi_ok && theta_ok && fact_ok && failures_seen == 0 && round_ok, os.str()};
}

Outcome ac6() {
  std::ostringstream os;
  bool ok = true;
  std::size_t rows = 0;
  for (int n = 2; n <= 3; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    IdealDimensionOracle g3(gamma3_commutator_generators(n));
    IdealDimensionOracle t(sbasis_tideal(), {SubstitutionClosure::Words});
    const GeneratorSet G = gamma3_basis(n), T = tideal_basis(n, 6);
    for (const auto& md : multidegrees_up_to(nn, 6)) {
      const std::size_t words = words_of_multidegree(md).size();
      ok = ok && words == count_normal_words(G, md) + g3.dimension(md);
      ok = ok && words == count_normal_words(T, md) + t.dimension(md);
      rows += 2;
    }
  }
  os << rows << " rows (gamma3 seed; T-ideal seed closed under substitutions), n<=3, degree<=6, exact";
  return {ok, os.str()};
}

Outcome ac7() {
  const GeneratorSet G = tideal_basis(5, 7);
  auto ids = latyshev_identities(5);
  std::size_t nonzero = 0;
  for (const auto& p : ids) nonzero += !reduce(p, G).is_zero();
  std::ostringstream os;
  os << ids.size() << " instances over 5 variables, nonzero normal forms=" << nonzero << " (tideal_basis(5,7), "
     << G.size() << " generators)";
  return {nonzero == 0 && !ids.empty(), os.str()};
}

Outcome ac8() {
  const GeneratorSet G = tideal_basis(3, 6);
  std::mt19937_64 rng(20240607);
  std::size_t evaluations = 0, nonzero = 0;
  for (int trial = 0; trial < 50; ++trial) {
    GrassmannAssignment a;
    for (int v = 1; v <= 3; ++v) a.emplace(v, random_grassmann_element(rng, 4));
    for (const auto& g : G) {
      ++evaluations;
      nonzero += !evaluate(g.poly, a).is_zero();
    }
  }
  std::ostringstream os;
  os << "50 assignments (seed 20240607, e1..e4) x " << G.size() << " members, nonzero=" << nonzero;
  return {nonzero == 0 && evaluations == 50 * G.size(), os.str()};
}

Outcome ac9() {
  GeneratorSet done = complete_up_to_degree(GeneratorSet::from_polynomials(gamma3_commutator_generators(3)), 4);
  const bool eq = leading_word_set(done) == leading_word_set(gamma3_basis(3));
  std::ostringstream os;
  os << "completed " << done.size() << " generators, leading words " << (eq ? "equal" : "differ")
     << " to gamma3_basis(3); n=3 bound 4";
  return {eq, os.str()};
}

}  // namespace

int main() {
  run("AC1", "gamma3 dimensions and compositions", ac1);
  run("AC2", "S-basis orbit leading words", ac2);
  run("AC3", "T-ideal dimensions, minimality, ablation", ac3);
  run("AC4", "two-variable corrected basis", ac4);
  run("AC5", "psi/theta bijection", ac5);
  run("AC6", "oracle cross-check", ac6);
  run("AC7", "Latyshev identities", ac7);
  run("AC8", "Grassmann vanishing", ac8);
  run("AC9", "completion re-derivation", ac9);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
