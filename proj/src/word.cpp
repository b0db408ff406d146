#include "ncgb/word.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <stdexcept>

namespace ncgb {

namespace {

char to_byte(int variable) {
  if (variable < 1 || variable > kMaxVariable)
    throw std::out_of_range("variable index out of range: " + std::to_string(variable));
  return static_cast<char>(static_cast<unsigned char>(variable));
}

}  // namespace

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int v : letters) letters_.push_back(to_byte(v));
}

Word::Word(std::span<const int> letters) {
  letters_.reserve(letters.size());
  for (int v : letters) letters_.push_back(to_byte(v));
}

Word Word::letter(int variable) {
  Word w;
  w.letters_.push_back(to_byte(variable));
  return w;
}

Word Word::operator*(const Word& rhs) const {
  Word w;
  w.letters_.reserve(size() + rhs.size());
  w.letters_ = letters_;
  w.letters_ += rhs.letters_;
  return w;
}

Word& Word::operator*=(const Word& rhs) {
  letters_ += rhs.letters_;
  return *this;
}

void Word::push_back(int variable) { letters_.push_back(to_byte(variable)); }

Word Word::subword(std::size_t pos, std::size_t len) const {
  Word w;
  w.letters_ = letters_.substr(pos, len);
  return w;
}

bool Word::matches_at(const Word& pattern, std::size_t pos) const noexcept {
  if (pos + pattern.size() > size()) return false;
  return letters_.compare(pos, pattern.size(), pattern.letters_) == 0;
}

bool Word::contains(const Word& pattern) const noexcept {
  return letters_.find(pattern.letters_) != std::string::npos;
}

std::vector<std::size_t> Word::occurrences(const Word& pattern) const {
  std::vector<std::size_t> out;
  if (pattern.size() > size()) return out;
  for (std::size_t p = letters_.find(pattern.letters_); p != std::string::npos;
       p = letters_.find(pattern.letters_, p + 1))
    out.push_back(p);
  return out;
}

int Word::max_letter() const noexcept {
  int m = 0;
  for (std::size_t i = 0; i < size(); ++i) m = std::max(m, (*this)[i]);
  return m;
}

std::vector<int> Word::letters() const {
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = (*this)[i];
  return out;
}

std::string Word::to_string() const {
  if (empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += '*';
    s += 'x';
    s += std::to_string((*this)[i]);
  }
  return s;
}

std::string Word::to_sequence() const {
  std::string s;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ',';
    s += std::to_string((*this)[i]);
  }
  return s;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  if (a.size() != b.size()) return a.size() <=> b.size();
  int c = std::memcmp(a.letters_.data(), b.letters_.data(), a.size());
  return c <=> 0;
}

Order word_compare(const Word& u, const Word& v) noexcept {
  auto c = u <=> v;
  if (c < 0) return Order::Less;
  if (c > 0) return Order::Greater;
  return Order::Equal;
}

int Multidegree::total() const noexcept {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

bool Multidegree::divides(const Multidegree& other) const noexcept {
  if (size() > other.size()) {
    for (std::size_t i = other.size(); i < size(); ++i)
      if (exponents[i] != 0) return false;
  }
  for (std::size_t i = 0; i < std::min(size(), other.size()); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

Multidegree Multidegree::operator+(const Multidegree& rhs) const {
  Multidegree r(std::max(size(), rhs.size()));
  for (std::size_t i = 0; i < size(); ++i) r.exponents[i] += exponents[i];
  for (std::size_t i = 0; i < rhs.size(); ++i) r.exponents[i] += rhs.exponents[i];
  return r;
}

Multidegree Multidegree::operator-(const Multidegree& rhs) const {
  Multidegree r = *this;
  if (rhs.size() > r.size()) r.exponents.resize(rhs.size(), 0);
  for (std::size_t i = 0; i < rhs.size(); ++i) r.exponents[i] -= rhs.exponents[i];
  return r;
}

std::string Multidegree::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exponents[i]);
  }
  return s + ")";
}

std::strong_ordering operator<=>(const Multidegree& a, const Multidegree& b) noexcept {
  if (auto c = a.total() <=> b.total(); c != 0) return c;
  return a.exponents <=> b.exponents;
}

Multidegree multidegree_of(const Word& w, std::size_t n) {
  Multidegree md(n);
  for (std::size_t i = 0; i < w.size(); ++i) {
    int v = w[i];
    if (static_cast<std::size_t>(v) > n)
      throw std::out_of_range("letter x" + std::to_string(v) + " exceeds the ambient variable count " +
                              std::to_string(n));
    ++md.exponents[v - 1];
  }
  return md;
}

namespace {

void compositions(std::size_t n, int remaining, std::vector<int>& cur,
                  std::vector<Multidegree>& out) {
  if (cur.size() + 1 == n) {
    cur.push_back(remaining);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur.push_back(e);
    compositions(n, remaining - e, cur, out);
    cur.pop_back();
  }
}

void words_rec(Multidegree& left, Word& cur, std::vector<Word>& out) {
  bool any = false;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i] == 0) continue;
    any = true;
    --left[i];
    cur.push_back(static_cast<int>(i) + 1);
    words_rec(left, cur, out);
    cur.pop_back();
    ++left[i];
  }
  if (!any) out.push_back(cur);
}

}  // namespace

std::vector<Multidegree> multidegrees_of_total(std::size_t n, int d) {
  std::vector<Multidegree> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  compositions(n, d, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multidegree> multidegrees_up_to(std::size_t n, int bound) {
  std::vector<Multidegree> out;
  for (int d = 0; d <= bound; ++d) {
    auto layer = multidegrees_of_total(n, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Word> words_of_multidegree(const Multidegree& md) {
  std::vector<Word> out;
  Multidegree left = md;
  Word cur;
  words_rec(left, cur, out);
  return out;
}

}  // namespace ncgb
