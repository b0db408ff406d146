#include <doctest.h>

#include <random>

#include "ncgb/families.hpp"
#include "ncgb/grassmann.hpp"
#include "ncgb/parse.hpp"

using namespace ncgb;

namespace {

using G = GrassmannElement;

G e(int i) { return G::generator(i); }
G one() { return G(1); }

// Sign of sorting a concatenated index list: brute-force bubble sort.
int bubble_sign(std::vector<int> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1]) return 0;
  return sign;
}

std::vector<int> indices(G::Mask m) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (m >> i & 1) out.push_back(i + 1);
  return out;
}

}  // namespace

TEST_CASE("grassmann_mul examples") {
  CHECK(grassmann_mul(e(1), e(2)) == G::monomial(0b11));
  CHECK(grassmann_mul(e(2), e(1)) == G::monomial(0b11, -1));
  CHECK(grassmann_mul(e(1), e(1)).is_zero());
  CHECK((one() + e(1)) * (one() + e(2)) == one() + e(1) + e(2) + G::monomial(0b11));
  CHECK(((one() + e(1)) * (one() + e(2))).to_string() == "1 + e1 + e2 + e1*e2");
}

TEST_CASE("sign rule agrees with bubble-sort parity") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<G::Mask> mask(0, (1u << 7) - 1);
  for (int t = 0; t < 500; ++t) {
    G::Mask a = mask(rng), b = mask(rng);
    auto ia = indices(a), ib = indices(b);
    ia.insert(ia.end(), ib.begin(), ib.end());
    CHECK(grassmann_sign(a, b) == bubble_sign(ia));
  }
}

TEST_CASE("associativity and supercommutativity on basis elements") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<G::Mask> mask(0, (1u << 6) - 1);
  for (int t = 0; t < 300; ++t) {
    G a = G::monomial(mask(rng)), b = G::monomial(mask(rng)), c = G::monomial(mask(rng));
    CHECK((a * b) * c == a * (b * c));
    const int pa = std::popcount(a.terms().begin()->first), pb = std::popcount(b.terms().begin()->first);
    CHECK(a * b == Rational((pa * pb) % 2 ? -1 : 1) * (b * a));
  }
}

TEST_CASE("parse and print") {
  CHECK(parse_grassmann("e1*e2") == G::monomial(0b11));
  CHECK(parse_grassmann("e2*e1") == G::monomial(0b11, -1));
  CHECK(parse_grassmann("-4*e1*e2").to_string() == "-4*e1*e2");
  CHECK(parse_grassmann("1/2 + e3 - e1*e3").to_string() == "1/2 + e3 - e1*e3");
  CHECK(parse_grassmann("(1+e1)^2") == one() + Rational(2) * e(1));
  CHECK(G().to_string() == "0");
  CHECK_THROWS(parse_grassmann("x1"));
}

TEST_CASE("evaluate examples") {
  GrassmannAssignment odd{{1, e(1)}, {2, e(2)}, {3, e(3)}};
  CHECK(evaluate(parse_polynomial("[x1,x2,x3]"), odd).is_zero());
  GrassmannAssignment affine{{1, one() + e(1)}, {2, one() + e(2)}};
  CHECK(evaluate(parse_polynomial("(x2*x1)^2-(x1*x2)^2"), affine) == G::monomial(0b11, -4));
  CHECK(evaluate(Polynomial(Rational(1)), affine) == one());
  CHECK_THROWS_AS(evaluate(x(3), affine), std::domain_error);
}

TEST_CASE("bml counterexample") {
  auto r = bml_counterexample();
  CHECK(r.witness.to_string() == "-4*e1*e2");
  CHECK_FALSE(r.normal_form.is_zero());
  CHECK(r.basis_vanishes);
  CHECK(r.passed());
  CHECK(r.to_json()["membership"] == "not in T-ideal");
}

TEST_CASE("T-ideal basis members vanish on E") {
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 3; ++n) {
    const GeneratorSet basis = tideal_basis(n, 6);
    // Affine assignments x_i -> 1 + e_j or e_j.
    for (int trial = 0; trial < 30; ++trial) {
      GrassmannAssignment a;
      std::uniform_int_distribution<int> gen(1, 4), kind(0, 1);
      for (int v = 1; v <= n; ++v) a.emplace(v, (kind(rng) ? one() : G()) + e(gen(rng)));
      for (const auto& g : basis) CHECK(evaluate(g.poly, a).is_zero());
    }
    for (int trial = 0; trial < 50; ++trial) {
      GrassmannAssignment a;
      for (int v = 1; v <= n; ++v) a.emplace(v, random_grassmann_element(rng, 4));
      for (const auto& g : basis) CHECK(evaluate(g.poly, a).is_zero());
    }
  }
}

TEST_CASE("a polynomial outside the T-ideal is detected on E") {
  // [x2,x1]x1 is not an identity of E.
  GrassmannAssignment a{{1, e(1)}, {2, e(2)}};
  CHECK_FALSE(evaluate(parse_polynomial("[x2,x1]"), a).is_zero());
}
