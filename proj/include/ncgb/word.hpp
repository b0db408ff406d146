#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ncgb {

/// Largest variable index a word can hold (letters are stored as bytes).
inline constexpr int kMaxVariable = 255;

/// A monomial of the free associative algebra: a finite sequence of variable
/// indices, 1-based (letter i stands for x_i).  The empty word is the unit.
///
/// Words are totally ordered by deg-lex: shorter words are smaller, words of
/// equal length compare left to right with x1 < x2 < ...  The natural
/// operator<=> implements exactly this order.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::span<const int> letters);

  static Word letter(int variable);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  int operator[](std::size_t pos) const noexcept {
    return static_cast<unsigned char>(letters_[pos]);
  }

  /// Concatenation.
  Word operator*(const Word& rhs) const;
  Word& operator*=(const Word& rhs);
  void push_back(int variable);
  void pop_back() { letters_.pop_back(); }

  Word subword(std::size_t pos, std::size_t len) const;
  /// True if `pattern` occurs as a contiguous subword starting at `pos`.
  bool matches_at(const Word& pattern, std::size_t pos) const noexcept;
  bool contains(const Word& pattern) const noexcept;
  /// All start positions of `pattern` in this word (overlapping occurrences included).
  std::vector<std::size_t> occurrences(const Word& pattern) const;

  int max_letter() const noexcept;
  std::vector<int> letters() const;

  /// "x2*x1*x1"; the empty word prints as "1".
  std::string to_string() const;
  /// "2,1,1" (empty word prints as the empty string).
  std::string to_sequence() const;

  const std::string& bytes() const noexcept { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

 private:
  std::string letters_;
};

enum class Order { Less, Equal, Greater };

/// Deg-lex comparison.
Order word_compare(const Word& u, const Word& v) noexcept;

/// Per-variable occurrence counts, one entry per ambient variable.
struct Multidegree {
  std::vector<int> exponents;

  Multidegree() = default;
  explicit Multidegree(std::size_t n) : exponents(n, 0) {}
  Multidegree(std::initializer_list<int> e) : exponents(e) {}
  explicit Multidegree(std::vector<int> e) : exponents(std::move(e)) {}

  std::size_t size() const noexcept { return exponents.size(); }
  int total() const noexcept;
  int operator[](std::size_t i) const { return exponents[i]; }
  int& operator[](std::size_t i) { return exponents[i]; }

  /// Componentwise <=.
  bool divides(const Multidegree& other) const noexcept;
  Multidegree operator+(const Multidegree& rhs) const;
  Multidegree operator-(const Multidegree& rhs) const;

  /// "(1,2,0)".
  std::string to_string() const;

  friend bool operator==(const Multidegree&, const Multidegree&) = default;
  /// Rows are reported in this order: total degree first, then
  /// lexicographically on the exponent vector.
  friend std::strong_ordering operator<=>(const Multidegree& a, const Multidegree& b) noexcept;
};

/// Entry i counts occurrences of x_{i+1}.  Throws std::out_of_range if some
/// letter exceeds n.
Multidegree multidegree_of(const Word& w, std::size_t n);

/// All multidegrees over n variables of total degree exactly d, in report order.
std::vector<Multidegree> multidegrees_of_total(std::size_t n, int d);
/// All multidegrees over n variables of total degree <= bound, in report order.
std::vector<Multidegree> multidegrees_up_to(std::size_t n, int bound);

/// All words with the given multidegree, ascending deg-lex.
std::vector<Word> words_of_multidegree(const Multidegree& md);

}  // namespace ncgb

template <>
struct std::hash<ncgb::Word> {
  std::size_t operator()(const ncgb::Word& w) const noexcept {
    return std::hash<std::string>{}(w.bytes());
  }
};
