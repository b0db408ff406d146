#include "ncgb/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "ncgb/families.hpp"
#include "ncgb/parse.hpp"
#include "ncgb/rewrite.hpp"

namespace ncgb {

GrassmannElement::GrassmannElement(const Rational& scalar) { add_term(0, scalar); }

GrassmannElement GrassmannElement::generator(int i) {
  if (i < 1 || i > kMaxGenerator) throw std::out_of_range("Grassmann generator e" + std::to_string(i));
  return monomial(Mask{1} << (i - 1));
}

GrassmannElement GrassmannElement::monomial(Mask mask, const Rational& coeff) {
  GrassmannElement e;
  e.add_term(mask, coeff);
  return e;
}

Rational GrassmannElement::coeff(Mask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GrassmannElement::add_term(Mask mask, const Rational& c) {
  if (ncgb::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(mask, c);
  if (inserted) return;
  it->second += c;
  if (ncgb::is_zero(it->second)) terms_.erase(it);
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

int grassmann_sign(GrassmannElement::Mask a, GrassmannElement::Mask b) {
  if (a & b) return 0;
  // Moving each e_j of b left past the elements of a with larger index.
  int inversions = 0;
  for (GrassmannElement::Mask rest = b; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    inversions += std::popcount(j + 1 < 64 ? a >> (j + 1) : GrassmannElement::Mask{0});
  }
  return inversions % 2 ? -1 : 1;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  GrassmannElement r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      int s = grassmann_sign(ma, mb);
      if (s == 0) continue;
      r.add_term(ma | mb, s > 0 ? Rational(ca * cb) : Rational(-ca * cb));
    }
  return r;
}

GrassmannElement operator*(const Rational& c, const GrassmannElement& a) {
  GrassmannElement r;
  for (const auto& [m, v] : a.terms_) r.add_term(m, c * v);
  return r;
}

std::string GrassmannElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Mask, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    int px = std::popcount(x.first), py = std::popcount(y.first);
    if (px != py) return px < py;
    // Same size: compare index sequences lexicographically via lowest differing bit.
    Mask diff = x.first ^ y.first;
    return diff != 0 && (x.first & (diff & -diff)) != 0;
  });
  std::string s;
  for (const auto& [m, c] : ordered) {
    Rational mag = abs(c);
    if (s.empty()) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    std::string factors;
    for (Mask rest = m; rest; rest &= rest - 1) {
      if (!factors.empty()) factors += "*";
      factors += "e" + std::to_string(std::countr_zero(rest) + 1);
    }
    if (factors.empty()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += factors;
    }
  }
  return s;
}

GrassmannElement grassmann_mul(const GrassmannElement& a, const GrassmannElement& b) { return a * b; }

GrassmannElement parse_grassmann(const std::string& text) {
  // Same grammar as polynomials with e in place of x; the e_i anticommute
  // only once the parsed word is evaluated in E.
  std::string rewritten = text;
  for (char& ch : rewritten) {
    if (ch == 'x') throw std::invalid_argument("unexpected 'x' in Grassmann element");
    if (ch == 'e') ch = 'x';
  }
  Polynomial p = parse_polynomial(rewritten);
  GrassmannAssignment gens;
  for (int i = 1; i <= p.max_variable(); ++i) gens.emplace(i, GrassmannElement::generator(i));
  return evaluate(p, gens);
}

GrassmannElement evaluate(const Polynomial& f, const GrassmannAssignment& assignment) {
  GrassmannElement total;
  for (const auto& t : f.terms()) {
    GrassmannElement prod(t.coeff);
    for (std::size_t i = 0; i < t.word.size() && !prod.is_zero(); ++i) {
      auto it = assignment.find(t.word[i]);
      if (it == assignment.end())
        throw std::domain_error("variable x" + std::to_string(t.word[i]) + " is not assigned");
      prod = prod * it->second;
    }
    total += prod;
  }
  return total;
}

GrassmannElement random_grassmann_element(std::mt19937_64& rng, int generators) {
  if (generators < 0 || generators > GrassmannElement::kMaxGenerator)
    throw std::out_of_range("generator count");
  std::uniform_int_distribution<int> terms(1, 3), coeff(-3, 3), size(0, std::min(2, generators));
  std::uniform_int_distribution<int> index(0, std::max(0, generators - 1));
  GrassmannElement e;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    GrassmannElement::Mask m = 0;
    const int k = size(rng);
    for (int s = 0; s < k; ++s) m |= GrassmannElement::Mask{1} << index(rng);
    e += GrassmannElement::monomial(m, coeff(rng));
  }
  return e;
}

nlohmann::json BmlReport::to_json() const {
  nlohmann::json assign = nlohmann::json::object();
  for (const auto& [v, e] : assignment) assign["x" + std::to_string(v)] = e.to_string();
  return {{"schema", "ncgb.grassmann-check/1"},
          {"polynomial", polynomial.to_string()},
          {"assignment", assign},
          {"witness", witness.to_string()},
          {"normal_form", normal_form.to_string()},
          {"basis_members", basis_members},
          {"random_trials", random_trials},
          {"basis_vanishes", basis_vanishes},
          {"membership", witness.is_zero() ? "undecided" : "not in T-ideal"},
          {"verdict", passed() ? "pass" : "fail"}};
}

BmlReport bml_counterexample(std::uint64_t seed, std::size_t trials) {
  BmlReport r;
  const Polynomial p = x(2) * x(1);
  const Polynomial q = x(1) * x(2);
  r.polynomial = p * p - q * q;
  r.assignment.emplace(1, GrassmannElement(1) + GrassmannElement::generator(1));
  r.assignment.emplace(2, GrassmannElement(1) + GrassmannElement::generator(2));
  r.witness = evaluate(r.polynomial, r.assignment);

  const GeneratorSet basis = tideal_basis(2, 6);
  r.normal_form = reduce(r.polynomial, basis);
  r.basis_members = basis.size();
  r.random_trials = trials;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gens(1, 4);
  for (std::size_t t = 0; t < trials; ++t) {
    GrassmannAssignment a;
    const int g = gens(rng);
    for (int v = 1; v <= 2; ++v) a.emplace(v, random_grassmann_element(rng, g));
    for (const auto& member : basis)
      if (!evaluate(member.poly, a).is_zero()) r.basis_vanishes = false;
  }
  return r;
}

}  // namespace ncgb
