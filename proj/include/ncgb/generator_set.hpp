#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncgb/aho_corasick.hpp"
#include "ncgb/polynomial.hpp"

namespace ncgb {

struct Generator {
  std::size_t id = 0;
  std::string label;
  Polynomial poly;  // monic
  Word lead;        // cached leading word of poly
};

/// An indexed family of monic polynomials with cached leading words: the
/// rewriting system lt(g) -> lt(g) - g.  Immutable once built; copies share
/// the subword automaton.
class GeneratorSet {
 public:
  GeneratorSet();

  /// Ids are taken from the input and must be unique.  Polynomials are made
  /// monic; zero polynomials are rejected with std::invalid_argument.
  explicit GeneratorSet(std::vector<Generator> members);

  /// Ids 0..n-1 and labels "<prefix><id>".
  static GeneratorSet from_polynomials(const std::vector<Polynomial>& polys,
                                       const std::string& prefix = "g");

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::span<const Generator> members() const noexcept { return members_; }
  const Generator& operator[](std::size_t pos) const { return members_[pos]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Position of the member with the given id.
  std::optional<std::size_t> position_of(std::size_t id) const;
  const Generator& by_id(std::size_t id) const;
  const Generator* find_label(const std::string& label) const;

  /// Members kept by `keep`, ids preserved.
  GeneratorSet filter(const std::function<bool(const Generator&)>& keep) const;
  /// This set followed by `more`; ids of `more` are shifted past ours.
  GeneratorSet extended(const std::vector<std::pair<std::string, Polynomial>>& more) const;

  std::size_t next_id() const noexcept;
  int max_degree() const noexcept;
  std::vector<Word> leading_words() const;

  const AhoCorasick& automaton() const noexcept { return *automaton_; }

 private:
  std::vector<Generator> members_;
  std::shared_ptr<const AhoCorasick> automaton_;
};

}  // namespace ncgb
