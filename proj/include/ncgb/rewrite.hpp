#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncgb/generator_set.hpp"
#include "ncgb/polynomial.hpp"

namespace ncgb {

struct SubwordMatch {
  std::size_t position = 0;
  std::size_t generator_id = 0;
  friend bool operator==(const SubwordMatch&, const SubwordMatch&) = default;
};

/// Leftmost occurrence of some leading word of G in w; among generators
/// matching at that position the smallest id wins.
std::optional<SubwordMatch> find_lt_subword(const Word& w, const GeneratorSet& G);

bool is_normal_word(const Word& w, const GeneratorSet& G);

/// One rewriting step: `coefficient * left * g * right` was subtracted,
/// cancelling the monomial `word` = left * lt(g) * right.
struct ReductionStep {
  Word word;
  std::size_t generator_id = 0;
  Word left;
  Word right;
  Rational coefficient;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;

  /// Sum of coefficient * left * g * right over the steps, i.e. f - NF(f).
  Polynomial replay(const GeneratorSet& G) const;
  std::vector<std::string> lines(const GeneratorSet& G) const;
};

struct NormalFormResult {
  Polynomial normal_form;
  ReductionTrace trace;
};

/// Full reduction (tail included).  Always rewrites the deg-lex greatest
/// reducible monomial, at its leftmost reducible position, by the
/// smallest-id generator matching there.
NormalFormResult normal_form(const Polynomial& f, const GeneratorSet& G);
/// Same strategy, no trace.
Polynomial reduce(const Polynomial& f, const GeneratorSet& G);

struct NormalWordCensus {
  std::vector<Word> words;                      // empty unless requested
  std::map<Multidegree, std::size_t> counts;    // every multidegree up to the bound, zeros included
  std::vector<std::size_t> counts_by_degree;    // index = total degree
};

/// Words over x1..xn of degree <= bound avoiding every leading word of G,
/// found by depth-first search that abandons any prefix already containing
/// a leading word.
NormalWordCensus enumerate_normal_words(const GeneratorSet& G, std::size_t n, int bound,
                                        bool collect_words = true);

/// Normal words of one multidegree.
std::size_t count_normal_words(const GeneratorSet& G, const Multidegree& md);

}  // namespace ncgb
