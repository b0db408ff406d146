#include <doctest.h>

#include "../support/oracles.hpp"
#include "ncgb/endo.hpp"
#include "ncgb/families.hpp"
#include "ncgb/groebner.hpp"
#include "ncgb/oracle.hpp"
#include "ncgb/pbw.hpp"

using namespace ncgb;

namespace {

Polynomial fp21() { return commutator(commutator(x(2), x(1)), x(1)); }
Polynomial fpp21() { return commutator(x(2), commutator(x(2), x(1))); }

std::size_t pbw_oracle(const Multidegree& md) { return static_cast<std::size_t>(oracle::pbw_dimension(md.exponents)); }
std::size_t grassmann_oracle(const Multidegree& md) {
  return static_cast<std::size_t>(oracle::grassmann_dimension(md.exponents));
}

}  // namespace

TEST_CASE("find_obstructions examples") {
  GeneratorSet G = GeneratorSet::from_polynomials({fpp21(), fp21()});
  bool found = false;
  for (const auto& ob : find_obstructions(G, 4))
    if (ob.kind == ObstructionKind::Overlap && ob.superposition == Word{2, 2, 1, 1}) found = true;
  CHECK(found);

  CHECK(find_obstructions(GeneratorSet::from_polynomials({commutator(x(2), x(1))}), 3).empty());

  GeneratorSet inc({{0, "big", Polynomial(Word{3, 2, 1, 1}) - Polynomial(Word{1, 1, 1, 1}), {}},
                    {1, "small", commutator(x(2), x(1)), {}}});
  auto obs = find_obstructions(inc, 4);
  REQUIRE(obs.size() == 1);
  CHECK(obs[0].kind == ObstructionKind::Inclusion);
  CHECK(obs[0].first_id == 0);
  CHECK(obs[0].second_id == 1);
}

TEST_CASE("self-overlaps are found") {
  GeneratorSet G = GeneratorSet::from_polynomials({commutator(x(2), x(1)) * commutator(x(2), x(1))});
  bool found = false;
  for (const auto& ob : find_obstructions(G, 6))
    if (ob.superposition == Word{2, 1, 2, 1, 2, 1}) found = true;
  CHECK(found);
}

TEST_CASE("both multiples of an obstruction have the superposition as leading word") {
  const GeneratorSet G = tideal_basis(3, 6);
  for (const auto& ob : find_obstructions(G, 6)) {
    const auto& g1 = G.by_id(ob.first_id);
    const auto& g2 = G.by_id(ob.second_id);
    CHECK(ob.first_left * g1.lead * ob.first_right == ob.superposition);
    CHECK(ob.second_left * g2.lead * ob.second_right == ob.superposition);
    Polynomial s = s_polynomial(ob, G);
    if (!s.is_zero()) CHECK(s.leading_word() < ob.superposition);
  }
}

TEST_CASE("check_compositions examples") {
  CHECK(check_compositions(gamma3_basis(3), 6).passed());
  CHECK(check_compositions(GeneratorSet::from_polynomials({commutator(x(2), x(1))}), 4).passed());

  // Without t21 the compositions close, but the T-ideal dimension check fails in degree 4.
  GeneratorSet no_t = GeneratorSet::from_polynomials({fp21(), fpp21()});
  CHECK(check_compositions(no_t, 4).passed());
  auto report = verify_by_dimension(no_t, grassmann_count, 2, 4);
  CHECK_FALSE(report.passed());
  auto failed = report.failed_rows();
  REQUIRE_FALSE(failed.empty());
  CHECK(failed.front() == Multidegree{2, 2});
}

TEST_CASE("a non-Groebner set has a failing composition") {
  // x1x1 - x2 overlaps itself in x1x1x1 with S-polynomial x1x2 - x2x1, which is normal.
  GeneratorSet G = GeneratorSet::from_polynomials({x(1) * x(1) - x(2)});
  CHECK_FALSE(check_compositions(G, 3).passed());
}

TEST_CASE("completion re-derives the gamma3 leading words") {
  auto complete_lw = [](int n, int bound) {
    return leading_word_set(
        complete_up_to_degree(GeneratorSet::from_polynomials(gamma3_commutator_generators(n)), bound));
  };
  CHECK(complete_lw(2, 4) == std::set<Word>{Word{2, 1, 1}, Word{2, 2, 1}});
  CHECK(complete_lw(3, 4) == leading_word_set(gamma3_basis(3)));

  GeneratorSet done = complete_up_to_degree(gamma3_basis(3), 6);
  CHECK(leading_word_set(done) == leading_word_set(gamma3_basis(3)));
  CHECK(check_reduced(done).empty());
  GeneratorSet again = complete_up_to_degree(done, 6);
  CHECK(leading_word_set(again) == leading_word_set(done));
  for (const auto& g : again) CHECK(reduce(g.poly, done).is_zero());
}

TEST_CASE("completion to a constant is reported") {
  GeneratorSet seed = GeneratorSet::from_polynomials({x(2) * x(1) - x(1), x(2) * x(1) - x(1) - Polynomial(Rational(1))});
  CHECK_THROWS_AS(complete_up_to_degree(seed, 3), std::domain_error);
  // x2x1 - 1 and x1x2: the overlap x2x1x2 gives -x2, and then x2x1 - 1 reduces to -1.
  GeneratorSet G = GeneratorSet::from_polynomials({x(2) * x(1) - Polynomial(Rational(1)), x(1) * x(2)});
  CHECK_THROWS_AS(complete_up_to_degree(G, 4), std::domain_error);
}

TEST_CASE("ideal dimension oracle examples") {
  const auto seed = gamma3_commutator_generators(2);
  CHECK(ideal_dimension_oracle(seed, Multidegree{2, 1}) == 1);
  CHECK(ideal_dimension_oracle(seed, Multidegree{1, 1}) == 0);
  const std::vector<Polynomial> triple{commutator(commutator(x(1), x(2)), x(3))};
  CHECK(ideal_dimension_oracle(triple, Multidegree{1, 1, 1}, {SubstitutionClosure::Variables}) == 2);
  CHECK(ideal_dimension_oracle(triple, Multidegree{1, 1, 1}, {SubstitutionClosure::Words}) == 2);
  CHECK_THROWS_AS(ideal_dimension_oracle(seed, Multidegree{6, 6}, {SubstitutionClosure::None, 100}),
                  ResourceLimitExceeded);
  CHECK_THROWS_AS(IdealDimensionOracle({x(1) + x(1) * x(1)}), std::invalid_argument);
}

TEST_CASE("oracle consistency: words = normal + ideal dimension (gamma3, n <= 3, degree <= 6)") {
  for (int n = 2; n <= 3; ++n) {
    IdealDimensionOracle oracle(gamma3_commutator_generators(n));
    const GeneratorSet G = gamma3_basis(n);
    auto census = enumerate_normal_words(G, static_cast<std::size_t>(n), 6, false);
    for (const auto& [md, count] : census.counts)
      CHECK(words_of_multidegree(md).size() == count + oracle.dimension(md));
  }
}

TEST_CASE("oracle pivots are the leading words of the ideal component") {
  IdealDimensionOracle oracle(gamma3_commutator_generators(3));
  const GeneratorSet G = gamma3_basis(3);
  for (const auto& md : multidegrees_up_to(3, 5))
    for (const auto& w : oracle.leading_words(md)) CHECK_FALSE(is_normal_word(w, G));
}

TEST_CASE("variable closure only reaches the gamma3 ideal; word closure reaches the T-ideal") {
  const std::vector<Polynomial> seed = sbasis_tideal();
  IdealDimensionOracle vars(seed, {SubstitutionClosure::Variables});
  IdealDimensionOracle words(seed, {SubstitutionClosure::Words});
  const Multidegree md{2, 2};
  // 6 words; T-ideal quotient has dimension 2, the gamma3 quotient 3.
  CHECK(words.dimension(md) == 4);
  CHECK(vars.dimension(md) == 3);
}

TEST_CASE("verify_by_dimension examples") {
  CHECK(verify_by_dimension(gamma3_basis(3), pbw_count, 3, 6).passed());
  CHECK(verify_by_dimension(tideal_basis(3, 8), grassmann_count, 3, 8, 2).passed());
  GeneratorSet no_h = gamma3_basis(3).filter([](const Generator& g) { return !matches_selector(g.label, "h"); });
  auto report = verify_by_dimension(no_h, pbw_count, 3, 4);
  CHECK_FALSE(report.passed());
  auto failed = report.failed_rows();
  REQUIRE_FALSE(failed.empty());
  CHECK(failed.front() == Multidegree{1, 1, 2});
  // The family basis also agrees with the independently counted references.
  CHECK(verify_by_dimension(gamma3_basis(3), pbw_oracle, 3, 6).passed());
  CHECK(verify_by_dimension(tideal_basis(3, 8), grassmann_oracle, 3, 8).passed());
}

TEST_CASE("a reference that exceeds the normal-word count is an inconsistency") {
  auto too_big = [](const Multidegree& md) { return words_of_multidegree(md).size() + 1; };
  CHECK_THROWS_AS(verify_by_dimension(gamma3_basis(2), too_big, 2, 3), InconsistentReference);
}

TEST_CASE("check_minimality examples") {
  for (auto e : check_minimality(tideal_basis(3, 10), 3, 10)) CHECK_FALSE(e.redundant);

  const GeneratorSet G = gamma3_basis(3);
  std::vector<std::pair<std::string, Polynomial>> extra;
  for (const auto& g : G) extra.emplace_back("m" + g.label, x(1) * g.poly * x(2));
  GeneratorSet bigger = G.extended(extra);
  for (const auto& e : check_minimality(bigger, 3, 8)) CHECK(e.redundant == (e.label[0] == 'm'));

  GeneratorSet orbit = enumerate_semigroup_images(TIdealMaps{3, 2}, sbasis_tideal(), 6);
  bool some = false;
  for (const auto& e : check_minimality(orbit, 3, 6)) some = some || e.redundant;
  CHECK(some);
}

TEST_CASE("check_reduced examples") {
  GeneratorSet orbit = enumerate_semigroup_images(OrderPreservingMaps{3, 3}, sbasis_gamma3(), 4);
  bool flagged = false;
  for (const auto& v : check_reduced(orbit)) {
    const auto& g = orbit.by_id(v.id);
    if (g.lead == Word{3, 2, 1} && v.monomial == Word{3, 1, 2}) flagged = true;
  }
  CHECK(flagged);
  CHECK(check_reduced(complete_up_to_degree(gamma3_basis(3), 5)).empty());
  CHECK(check_reduced(GeneratorSet::from_polynomials({commutator(x(2), x(1))})).empty());
}

TEST_CASE("same_initial_ideal") {
  CHECK(same_initial_ideal(gamma3_basis(3), gamma3_basis(3), 6));
  GeneratorSet no_h = gamma3_basis(3).filter([](const Generator& g) { return !matches_selector(g.label, "h"); });
  CHECK_FALSE(same_initial_ideal(gamma3_basis(3), no_h, 6));
  CHECK(same_initial_ideal(gamma3_basis(3), no_h, 3));
}

TEST_CASE("verification report JSON shape") {
  auto report = verify_by_dimension(gamma3_basis(2), pbw_count, 2, 3);
  report.compositions = check_compositions(gamma3_basis(2), 3);
  auto j = report.to_json();
  CHECK(j["schema"] == "ncgb.verification/1");
  CHECK(j["verdict"] == "pass");
  CHECK(j["rows"].size() == 10);
  CHECK(j["rows"][4]["multidegree"] == nlohmann::json::array({1, 1}));
  CHECK(j["compositions"]["failed"].empty());
}
