#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include <json.hpp>

#include "ncgb/polynomial.hpp"
#include "ncgb/rational.hpp"

namespace ncgb {

/// Element of the Grassmann algebra on e1..e64.  A basis monomial
/// e_{i1}...e_{ik} (i1 < ... < ik) is stored as the bitmask with bit i-1 set
/// for each index.
class GrassmannElement {
 public:
  using Mask = std::uint64_t;
  static constexpr int kMaxGenerator = 64;

  GrassmannElement() = default;
  explicit GrassmannElement(const Rational& scalar);
  static GrassmannElement generator(int i);
  static GrassmannElement monomial(Mask mask, const Rational& coeff = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Mask, Rational>& terms() const noexcept { return terms_; }
  Rational coeff(Mask mask) const;

  GrassmannElement operator-() const;
  GrassmannElement& operator+=(const GrassmannElement& rhs);
  GrassmannElement& operator-=(const GrassmannElement& rhs);
  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator*(const Rational& c, const GrassmannElement& a);
  friend bool operator==(const GrassmannElement&, const GrassmannElement&) = default;

  /// "-4*e1*e2", "1 + e1"; terms by increasing mask size then index; zero is "0".
  std::string to_string() const;

 private:
  void add_term(Mask mask, const Rational& c);
  std::map<Mask, Rational> terms_;
};

/// Sign of e_I * e_J: 0 when I and J meet, else (-1)^(inversions).
int grassmann_sign(GrassmannElement::Mask a, GrassmannElement::Mask b);

GrassmannElement grassmann_mul(const GrassmannElement& a, const GrassmannElement& b);

/// Parses "1 + e1", "2*e1*e2 - 1/2*e3", with parentheses and powers.
GrassmannElement parse_grassmann(const std::string& text);

using GrassmannAssignment = std::map<int, GrassmannElement>;

/// Substitutes x_i -> assignment[i] and multiplies in E.  Throws
/// std::domain_error if a variable of f is unassigned.
GrassmannElement evaluate(const Polynomial& f, const GrassmannAssignment& assignment);

/// A sparse element over e1..e_generators: 1 to 3 terms, each of at most two
/// generators, coefficients in [-3, 3].
GrassmannElement random_grassmann_element(std::mt19937_64& rng, int generators);

struct BmlReport {
  Polynomial polynomial;
  GrassmannAssignment assignment;
  GrassmannElement witness;
  Polynomial normal_form;            // modulo tideal_basis(2, 6)
  std::size_t random_trials = 0;
  std::size_t basis_members = 0;
  bool basis_vanishes = true;        // all members of tideal_basis(2, 6) evaluate to 0

  /// Both methods say "not in the T-ideal" and the basis vanishes on E.
  bool passed() const { return !witness.is_zero() && !normal_form.is_zero() && basis_vanishes; }
  nlohmann::json to_json() const;
};

/// Evaluates (x2x1)^2 - (x1x2)^2 at x1 -> 1+e1, x2 -> 1+e2 and cross-checks with
/// the normal form modulo tideal_basis(2, 6).
BmlReport bml_counterexample(std::uint64_t seed = 20240607, std::size_t trials = 20);

}  // namespace ncgb
