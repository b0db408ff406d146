#include "ncgb/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncgb {

namespace {

using Accumulator = std::map<Word, Rational, std::greater<>>;

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [w, c] : acc)
    if (!is_zero(c)) out.push_back({w, std::move(c)});
  return out;
}

// Merge of two descending term lists; `sign` is applied to b.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].word > b[j].word)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].word > a[i].word) {
      out.push_back({b[j].word, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (!is_zero(c)) out.push_back({a[i].word, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(const Word& w, Rational c) {
  if (!ncgb::is_zero(c)) terms_.push_back({w, std::move(c)});
}

Polynomial::Polynomial(const Rational& c) : Polynomial(Word{}, c) {}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Accumulator acc;
  for (auto& t : terms) acc[t.word] += t.coeff;
  return Polynomial(drain(acc));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("the zero polynomial has no leading term");
  return terms_.front();
}

Rational Polynomial::coeff(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& key) { return t.word > key; });
  if (it != terms_.end() && it->word == w) return it->coeff;
  return 0;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / terms_.front().coeff;
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= inv;
  return r;
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.word.size()));
  return d;
}

int Polynomial::max_variable() const noexcept {
  int m = 0;
  for (const auto& t : terms_) m = std::max(m, t.word.max_letter());
  return m;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.word.size() != terms_.front().word.size()) return false;
  return true;
}

bool Polynomial::is_multihomogeneous() const noexcept {
  if (terms_.empty()) return true;
  auto n = static_cast<std::size_t>(max_variable());
  Multidegree md = multidegree_of(terms_.front().word, n);
  for (const auto& t : terms_)
    if (multidegree_of(t.word, n) != md) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  terms_ = merge(terms_, rhs.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  terms_ = merge(terms_, rhs.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (ncgb::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return Polynomial(merge(a.terms_, b.terms_, +1));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return Polynomial(merge(a.terms_, b.terms_, -1));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Accumulator acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.word * t.word] += s.coeff * t.coeff;
  return Polynomial(drain(acc));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r = p;
  r *= c;
  return r;
}

Polynomial Polynomial::sandwich(const Word& u, const Word& v, const Rational& c) const {
  // Concatenating fixed words on both sides preserves the term order.
  if (ncgb::is_zero(c)) return {};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({u * t.word * v, t.coeff * c});
  return Polynomial(std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].word != b.terms_[i].word || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.word != t.word) return s.word > t.word;
    if (s.coeff != t.coeff) return s.coeff < t.coeff;
  }
  return a.terms_.size() < b.terms_.size();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coeff);
    bool neg = sgn(t.coeff) < 0;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (t.word.empty()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += t.word.to_string();
    }
  }
  return s;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial commutator(const Polynomial& f, const Polynomial& g) { return f * g - g * f; }

Polynomial commutator(std::span<const Polynomial> args) {
  if (args.empty()) throw std::invalid_argument("commutator of no arguments");
  Polynomial acc = args.front();
  for (std::size_t i = 1; i < args.size(); ++i) acc = commutator(acc, args[i]);
  return acc;
}

std::pair<Rational, Word> leading_term(const Polynomial& f) {
  const Term& t = f.leading_term();
  return {t.coeff, t.word};
}

Polynomial pow(const Polynomial& f, unsigned e) {
  Polynomial r = Polynomial::one();
  for (unsigned i = 0; i < e; ++i) r = r * f;
  return r;
}

Polynomial substitute(const Polynomial& f, std::span<const Word> images) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Word w;
    for (std::size_t i = 0; i < t.word.size(); ++i) {
      auto v = static_cast<std::size_t>(t.word[i]);
      if (v > images.size())
        throw std::domain_error("variable x" + std::to_string(v) + " has no image");
      w *= images[v - 1];
    }
    out.push_back({std::move(w), t.coeff});
  }
  return Polynomial::from_terms(std::move(out));
}

}  // namespace ncgb
