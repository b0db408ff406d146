#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ncgb/rational.hpp"
#include "ncgb/word.hpp"

namespace ncgb {

struct Term {
  Word word;
  Rational coeff;
};

/// An element of Q<X>: a finite sum of words with nonzero rational
/// coefficients.  Terms are kept sorted by word, deg-lex descending, so the
/// leading term is the first one.  No stored coefficient is ever zero.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Word& w, Rational c = 1);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Rational& c);

  static Polynomial variable(int i) { return Polynomial(Word::letter(i)); }
  static Polynomial one() { return Polynomial(Word{}); }
  /// Builds from an arbitrary list of (word, coefficient), merging like terms.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// Throws std::domain_error on the zero polynomial.
  const Term& leading_term() const;
  const Word& leading_word() const { return leading_term().word; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  /// Coefficient of `w` (zero if absent).
  Rational coeff(const Word& w) const;

  /// Divides by the leading coefficient.  Zero stays zero.
  Polynomial monic() const;

  /// Largest word length; -1 for zero.
  int degree() const noexcept;
  int max_variable() const noexcept;
  bool is_homogeneous() const noexcept;
  /// All words share one multidegree.
  bool is_multihomogeneous() const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

  /// u * p * v with `c` as an extra scalar.
  Polynomial sandwich(const Word& u, const Word& v, const Rational& c = 1) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  /// A total order for use as a set/map key (not mathematically meaningful).
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  /// Deg-lex descending, e.g. "2*x1*x2*x1 - x1*x1*x2"; zero prints "0".
  std::string to_string() const;

 private:
  explicit Polynomial(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
/// [f,g] = fg - gf.
Polynomial commutator(const Polynomial& f, const Polynomial& g);
/// Left-normed [[...[f1,f2],...],fk].
Polynomial commutator(std::span<const Polynomial> args);
std::pair<Rational, Word> leading_term(const Polynomial& f);

Polynomial pow(const Polynomial& f, unsigned e);

/// Replaces each x_i by the word images[i-1] and expands.  Throws
/// std::domain_error if f uses a variable with no image.
Polynomial substitute(const Polynomial& f, std::span<const Word> images);

inline Polynomial x(int i) { return Polynomial::variable(i); }

}  // namespace ncgb
