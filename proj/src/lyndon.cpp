#include "ncgb/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncgb {

bool is_lyndon_shirshov(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t r = 1; r < w.size(); ++r) {
    Word rotated = w.subword(r, w.size() - r) * w.subword(0, r);
    if (!(w > rotated)) return false;
  }
  return true;
}

LyndonShirshovWord bracket_lyndon_shirshov(const Word& u) {
  if (!is_lyndon_shirshov(u)) throw std::invalid_argument(u.to_string() + " is not Lyndon-Shirshov");
  if (u.size() == 1) return {u, "x" + std::to_string(u[0]), Polynomial(u)};
  for (std::size_t cut = 1; cut < u.size(); ++cut) {
    Word v = u.subword(cut, u.size() - cut);
    if (!is_lyndon_shirshov(v)) continue;
    auto left = bracket_lyndon_shirshov(u.subword(0, cut));
    auto right = bracket_lyndon_shirshov(v);
    return {u, "[" + left.bracketing + "," + right.bracketing + "]",
            commutator(left.commutator, right.commutator)};
  }
  // The last letter is always Lyndon-Shirshov, so the loop returns.
  throw std::logic_error("unreachable");
}

std::vector<LyndonShirshovWord> lyndon_shirshov_words(int n, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  std::vector<LyndonShirshovWord> out;
  if (n < 1) return out;
  for (const auto& md : multidegrees_of_total(static_cast<std::size_t>(n), degree))
    for (const auto& w : words_of_multidegree(md))
      if (is_lyndon_shirshov(w)) out.push_back(bracket_lyndon_shirshov(w));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.word < b.word; });
  return out;
}

}  // namespace ncgb
