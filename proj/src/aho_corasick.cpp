#include "ncgb/aho_corasick.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace ncgb {

AhoCorasick::AhoCorasick(const std::vector<Word>& patterns) {
  for (const auto& p : patterns) {
    if (p.empty()) throw std::invalid_argument("empty pattern in subword automaton");
    alphabet_ = std::max(alphabet_, p.max_letter());
    lengths_.push_back(p.size());
  }
  stride_ = static_cast<std::size_t>(alphabet_) + 1;

  // Trie, -1 marks a missing edge until the BFS fills in failure transitions.
  goto_.assign(stride_, -1);
  outputs_.emplace_back();
  for (std::size_t idx = 0; idx < patterns.size(); ++idx) {
    int s = 0;
    for (std::size_t i = 0; i < patterns[idx].size(); ++i) {
      std::size_t slot = static_cast<std::size_t>(s) * stride_ + patterns[idx][i];
      if (goto_[slot] < 0) {
        goto_[slot] = static_cast<int>(outputs_.size());
        outputs_.emplace_back();
        goto_.resize(goto_.size() + stride_, -1);
      }
      s = goto_[static_cast<std::size_t>(s) * stride_ + patterns[idx][i]];
    }
    outputs_[s].push_back(static_cast<std::uint32_t>(idx));
  }

  std::vector<int> fail(outputs_.size(), 0);
  std::queue<int> bfs;
  for (std::size_t c = 0; c < stride_; ++c) {
    int& t = goto_[c];
    if (t < 0) {
      t = 0;
    } else {
      fail[t] = 0;
      bfs.push(t);
    }
  }
  while (!bfs.empty()) {
    int s = bfs.front();
    bfs.pop();
    auto& out = outputs_[s];
    const auto& inherited = outputs_[fail[s]];
    out.insert(out.end(), inherited.begin(), inherited.end());
    for (std::size_t c = 0; c < stride_; ++c) {
      std::size_t slot = static_cast<std::size_t>(s) * stride_ + c;
      int t = goto_[slot];
      int f = goto_[static_cast<std::size_t>(fail[s]) * stride_ + c];
      if (t < 0) {
        goto_[slot] = f;
      } else {
        fail[t] = f;
        bfs.push(t);
      }
    }
  }
}

}  // namespace ncgb
