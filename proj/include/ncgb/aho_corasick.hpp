#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ncgb/word.hpp"

namespace ncgb {

/// Multi-pattern subword automaton over variable indices.  State 0 is the
/// root.  Letters larger than every pattern letter lead back to the root.
class AhoCorasick {
 public:
  AhoCorasick() : AhoCorasick(std::vector<Word>{}) {}
  explicit AhoCorasick(const std::vector<Word>& patterns);

  int root() const noexcept { return 0; }
  int next(int state, int letter) const noexcept {
    if (letter > alphabet_) return 0;
    return goto_[static_cast<std::size_t>(state) * stride_ + static_cast<std::size_t>(letter)];
  }
  /// Some pattern ends at this state (directly or through a suffix link).
  bool accepting(int state) const noexcept { return !outputs_[state].empty(); }
  /// Indices (into the constructor argument) of every pattern ending here.
  const std::vector<std::uint32_t>& outputs(int state) const noexcept { return outputs_[state]; }

  std::size_t state_count() const noexcept { return outputs_.size(); }
  std::size_t pattern_length(std::size_t pattern) const { return lengths_[pattern]; }

 private:
  int alphabet_ = 0;
  std::size_t stride_ = 1;
  std::vector<int> goto_;
  std::vector<std::vector<std::uint32_t>> outputs_;
  std::vector<std::size_t> lengths_;
};

}  // namespace ncgb
