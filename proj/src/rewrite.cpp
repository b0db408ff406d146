#include "ncgb/rewrite.hpp"

#include <functional>
#include <limits>

namespace ncgb {

std::optional<SubwordMatch> find_lt_subword(const Word& w, const GeneratorSet& G) {
  const AhoCorasick& ac = G.automaton();
  std::optional<SubwordMatch> best;
  int state = ac.root();
  for (std::size_t i = 0; i < w.size(); ++i) {
    state = ac.next(state, w[i]);
    for (std::uint32_t pattern : ac.outputs(state)) {
      std::size_t start = i + 1 - ac.pattern_length(pattern);
      std::size_t id = G[pattern].id;
      if (!best || start < best->position || (start == best->position && id < best->generator_id))
        best = SubwordMatch{start, id};
    }
  }
  return best;
}

bool is_normal_word(const Word& w, const GeneratorSet& G) {
  const AhoCorasick& ac = G.automaton();
  int state = ac.root();
  for (std::size_t i = 0; i < w.size(); ++i) {
    state = ac.next(state, w[i]);
    if (ac.accepting(state)) return false;
  }
  return true;
}

Polynomial ReductionTrace::replay(const GeneratorSet& G) const {
  Polynomial acc;
  for (const auto& s : steps) acc += G.by_id(s.generator_id).poly.sandwich(s.left, s.right, s.coefficient);
  return acc;
}

std::vector<std::string> ReductionTrace::lines(const GeneratorSet& G) const {
  std::vector<std::string> out;
  for (const auto& s : steps) {
    const auto& g = G.by_id(s.generator_id);
    std::string line = s.word.to_string() + " <- " + s.coefficient.get_str() + " * (" +
                       s.left.to_string() + ") " + g.label + " (" + s.right.to_string() + ")";
    out.push_back(std::move(line));
  }
  return out;
}

namespace {

template <typename OnStep>
Polynomial reduce_impl(const Polynomial& f, const GeneratorSet& G, OnStep&& on_step) {
  std::map<Word, Rational, std::greater<>> work;
  for (const auto& t : f.terms()) work.emplace(t.word, t.coeff);
  std::vector<Term> done;

  while (!work.empty()) {
    auto it = work.begin();
    auto match = find_lt_subword(it->first, G);
    if (!match) {
      done.push_back({it->first, std::move(it->second)});
      work.erase(it);
      continue;
    }
    const Generator& g = G.by_id(match->generator_id);
    Word word = it->first;
    Rational c = std::move(it->second);
    work.erase(it);
    Word left = word.subword(0, match->position);
    Word right = word.subword(match->position + g.lead.size(), std::string::npos);
    auto tail = g.poly.terms().subspan(1);
    for (const auto& t : tail) {
      Word w = left * t.word * right;
      auto [pos, inserted] = work.try_emplace(std::move(w), 0);
      pos->second -= c * t.coeff;
      if (is_zero(pos->second)) work.erase(pos);
    }
    on_step(ReductionStep{std::move(word), g.id, std::move(left), std::move(right), std::move(c)});
  }
  return Polynomial::from_terms(std::move(done));
}

}  // namespace

NormalFormResult normal_form(const Polynomial& f, const GeneratorSet& G) {
  NormalFormResult r;
  r.normal_form = reduce_impl(f, G, [&](ReductionStep&& s) { r.trace.steps.push_back(std::move(s)); });
  return r;
}

Polynomial reduce(const Polynomial& f, const GeneratorSet& G) {
  return reduce_impl(f, G, [](ReductionStep&&) {});
}

namespace {

struct Enumerator {
  const AhoCorasick& ac;
  std::size_t n;
  int bound;
  bool collect;
  NormalWordCensus& out;
  Word cur;
  Multidegree md;

  void visit(int state) {
    out.counts[md] += 1;
    out.counts_by_degree[cur.size()] += 1;
    if (collect) out.words.push_back(cur);
    if (static_cast<int>(cur.size()) == bound) return;
    for (std::size_t v = 1; v <= n; ++v) {
      int next = ac.next(state, static_cast<int>(v));
      if (ac.accepting(next)) continue;
      cur.push_back(static_cast<int>(v));
      ++md[v - 1];
      visit(next);
      --md[v - 1];
      cur.pop_back();
    }
  }
};

}  // namespace

NormalWordCensus enumerate_normal_words(const GeneratorSet& G, std::size_t n, int bound,
                                        bool collect_words) {
  NormalWordCensus census;
  if (bound < 0) return census;
  census.counts_by_degree.assign(static_cast<std::size_t>(bound) + 1, 0);
  for (const auto& md : multidegrees_up_to(n, bound)) census.counts[md] = 0;
  Enumerator e{G.automaton(), n, bound, collect_words, census, {}, Multidegree(n)};
  e.visit(G.automaton().root());
  return census;
}

std::size_t count_normal_words(const GeneratorSet& G, const Multidegree& md) {
  const AhoCorasick& ac = G.automaton();
  Multidegree left = md;
  std::size_t count = 0;
  std::function<void(int)> rec = [&](int state) {
    bool leaf = true;
    for (std::size_t v = 0; v < left.size(); ++v) {
      if (left[v] == 0) continue;
      leaf = false;
      int next = ac.next(state, static_cast<int>(v) + 1);
      if (ac.accepting(next)) continue;
      --left[v];
      rec(next);
      ++left[v];
    }
    if (leaf) ++count;
  };
  rec(ac.root());
  return count;
}

}  // namespace ncgb
