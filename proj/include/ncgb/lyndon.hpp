#pragma once

#include <string>
#include <vector>

#include "ncgb/polynomial.hpp"
#include "ncgb/word.hpp"

namespace ncgb {

struct LyndonShirshovWord {
  Word word;
  std::string bracketing;  // "[[x3,x2],[x3,x1]]"
  Polynomial commutator;   // the bracketed word expanded in Q<X>
};

/// Strictly greater than every nontrivial cyclic rotation (x1 < x2 < ...).
bool is_lyndon_shirshov(const Word& w);

/// [u] = [[w],[v]] where v is the longest proper suffix of u that is itself
/// Lyndon-Shirshov.  Throws std::invalid_argument if u is not.
LyndonShirshovWord bracket_lyndon_shirshov(const Word& u);

/// All Lyndon-Shirshov words of the given length in x1..xn, ascending deg-lex.
std::vector<LyndonShirshovWord> lyndon_shirshov_words(int n, int degree);

}  // namespace ncgb
