#include "ncgb/groebner.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "ncgb/parallel.hpp"

namespace ncgb {

std::string to_string(ObstructionKind kind) {
  return kind == ObstructionKind::Overlap ? "overlap" : "inclusion";
}

namespace {

void overlaps_between(const Generator& g1, const Generator& g2, int bound,
                      std::vector<Obstruction>& out) {
  const Word& a = g1.lead;
  const Word& b = g2.lead;
  std::size_t max_k = std::min(a.size(), b.size());
  for (std::size_t k = 1; k < max_k; ++k) {
    if (static_cast<int>(a.size() + b.size() - k) > bound) continue;
    if (!a.matches_at(b.subword(0, k), a.size() - k)) continue;
    Obstruction ob;
    ob.kind = ObstructionKind::Overlap;
    ob.first_id = g1.id;
    ob.second_id = g2.id;
    ob.first_right = b.subword(k, std::string::npos);
    ob.second_left = a.subword(0, a.size() - k);
    ob.superposition = a * ob.first_right;
    out.push_back(std::move(ob));
  }
}

void inclusions_of(const Generator& big, const Generator& small, int bound,
                   std::vector<Obstruction>& out) {
  if (big.id == small.id || static_cast<int>(big.lead.size()) > bound) return;
  if (big.lead == small.lead && big.id > small.id) return;  // equal words: one pair only
  for (std::size_t pos : big.lead.occurrences(small.lead)) {
    Obstruction ob;
    ob.kind = ObstructionKind::Inclusion;
    ob.first_id = big.id;
    ob.second_id = small.id;
    ob.superposition = big.lead;
    ob.second_left = big.lead.subword(0, pos);
    ob.second_right = big.lead.subword(pos + small.lead.size(), std::string::npos);
    out.push_back(std::move(ob));
  }
}

void obstructions_for_pair(const Generator& g1, const Generator& g2, int bound,
                           std::vector<Obstruction>& out) {
  overlaps_between(g1, g2, bound, out);
  inclusions_of(g1, g2, bound, out);
}

}  // namespace

std::vector<Obstruction> find_obstructions(const GeneratorSet& G, int bound) {
  std::vector<Obstruction> out;
  for (const auto& g1 : G)
    for (const auto& g2 : G) obstructions_for_pair(g1, g2, bound, out);
  return out;
}

Polynomial s_polynomial(const Obstruction& ob, const GeneratorSet& G) {
  const Generator& g1 = G.by_id(ob.first_id);
  const Generator& g2 = G.by_id(ob.second_id);
  return g1.poly.sandwich(ob.first_left, ob.first_right) -
         g2.poly.sandwich(ob.second_left, ob.second_right);
}

CompositionReport check_compositions(const GeneratorSet& G, int bound, int jobs) {
  CompositionReport report;
  report.bound = bound;
  auto obstructions = find_obstructions(G, bound);
  report.checked = obstructions.size();
  std::vector<Polynomial> remainders(obstructions.size());
  parallel_for(obstructions.size(), jobs,
               [&](std::size_t i) { remainders[i] = reduce(s_polynomial(obstructions[i], G), G); });
  for (std::size_t i = 0; i < obstructions.size(); ++i) {
    if (remainders[i].is_zero()) continue;
    const auto& ob = obstructions[i];
    report.failed.push_back({ob, G.by_id(ob.first_id).label, G.by_id(ob.second_id).label,
                             std::move(remainders[i])});
  }
  return report;
}

namespace {

// Keeps the members whose leading word is not a multiple of an earlier kept
// leading word (scanning by ascending leading word), then tail-reduces each
// against the others.
GeneratorSet minimize_and_tail_reduce(const GeneratorSet& G) {
  std::vector<Generator> members(G.begin(), G.end());
  std::stable_sort(members.begin(), members.end(), [](const Generator& a, const Generator& b) {
    return std::tie(a.lead, a.id) < std::tie(b.lead, b.id);
  });
  std::vector<Generator> kept;
  for (const auto& g : members) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Generator& k) { return g.lead.contains(k.lead); });
    if (!redundant) kept.push_back(g);
  }
  GeneratorSet minimal(kept);
  std::vector<Generator> reduced;
  for (const auto& g : minimal) {
    GeneratorSet others = minimal.filter([&](const Generator& h) { return h.id != g.id; });
    Polynomial tail = g.poly - Polynomial(g.lead);
    reduced.push_back({g.id, g.label, Polynomial(g.lead) + reduce(tail, others), {}});
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Generator& a, const Generator& b) { return a.id < b.id; });
  return GeneratorSet(std::move(reduced));
}

}  // namespace

GeneratorSet complete_up_to_degree(const GeneratorSet& seed, int bound) {
  // Linear inter-reduction of the seed, smallest leading words first.
  std::vector<Generator> pending(seed.begin(), seed.end());
  std::stable_sort(pending.begin(), pending.end(), [](const Generator& a, const Generator& b) {
    return std::tie(a.lead, a.id) < std::tie(b.lead, b.id);
  });
  GeneratorSet G;
  for (const auto& g : pending) {
    if (g.poly.degree() > bound) continue;
    Polynomial r = reduce(g.poly, G);
    if (r.is_zero()) continue;
    if (r.degree() <= 0) throw std::domain_error("seed reduces to a constant: the ideal is the whole algebra");
    std::vector<Generator> members(G.begin(), G.end());
    members.push_back({g.id, g.label, r, {}});
    G = GeneratorSet(std::move(members));
  }

  // Obstructions are processed by ascending superposition degree, FIFO
  // within a degree.
  std::multimap<std::size_t, Obstruction> queue;
  for (auto& ob : find_obstructions(G, bound)) {
    std::size_t d = ob.superposition.size();
    queue.emplace(d, std::move(ob));
  }
  std::size_t next_id = std::max(G.next_id(), seed.next_id());
  std::size_t added = 0;
  while (!queue.empty()) {
    auto it = queue.begin();
    Obstruction ob = std::move(it->second);
    queue.erase(it);
    Polynomial r = reduce(s_polynomial(ob, G), G);
    if (r.is_zero()) continue;
    if (r.degree() <= 0)
      throw std::domain_error("completion reached a constant: the ideal is the whole algebra");
    Generator fresh{next_id++, "c" + std::to_string(added++), r.monic(), r.leading_word()};
    std::vector<Generator> members(G.begin(), G.end());
    members.push_back(fresh);
    G = GeneratorSet(std::move(members));
    const Generator& added_gen = G.by_id(fresh.id);
    std::vector<Obstruction> fresh_obs;
    for (const auto& g : G) {
      obstructions_for_pair(added_gen, g, bound, fresh_obs);
      if (g.id != added_gen.id) obstructions_for_pair(g, added_gen, bound, fresh_obs);
    }
    for (auto& o : fresh_obs) {
      std::size_t d = o.superposition.size();
      queue.emplace(d, std::move(o));
    }
  }
  return minimize_and_tail_reduce(G);
}

bool VerificationReport::rows_match() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const DimensionRow& r) { return r.matches(); });
}

std::vector<Multidegree> VerificationReport::failed_rows() const {
  std::vector<Multidegree> out;
  for (const auto& r : rows)
    if (!r.matches()) out.push_back(r.multidegree);
  return out;
}

bool VerificationReport::passed() const noexcept {
  return rows_match() && members_reduce_to_zero && (!compositions || compositions->passed());
}

VerificationReport verify_by_dimension(const GeneratorSet& G, const ReferenceCounter& reference,
                                       std::size_t n, int bound, int jobs) {
  VerificationReport report;
  report.bound = bound;
  report.n = n;
  NormalWordCensus census = enumerate_normal_words(G, n, bound, false);
  std::vector<Multidegree> mds = multidegrees_up_to(n, bound);
  std::vector<std::size_t> refs(mds.size());
  parallel_for(mds.size(), jobs, [&](std::size_t i) { refs[i] = reference(mds[i]); });
  for (std::size_t i = 0; i < mds.size(); ++i) {
    DimensionRow row{mds[i], census.counts.at(mds[i]), refs[i], std::nullopt};
    if (row.normal < row.reference)
      throw InconsistentReference("multidegree " + mds[i].to_string() + ": " +
                                  std::to_string(row.normal) + " normal words but " +
                                  std::to_string(row.reference) + " reference basis elements");
    report.rows.push_back(std::move(row));
  }
  for (const auto& g : G)
    if (!reduce(g.poly, G).is_zero()) report.members_reduce_to_zero = false;
  return report;
}

std::vector<MinimalityEntry> check_minimality(const GeneratorSet& G, std::size_t n, int bound) {
  std::vector<MinimalityEntry> out;
  const AhoCorasick& ac = G.automaton();
  for (std::size_t pos = 0; pos < G.size(); ++pos) {
    const Generator& g = G[pos];
    if (g.poly.degree() > bound || static_cast<std::size_t>(g.poly.max_variable()) > n) continue;
    bool redundant = false;
    int state = ac.root();
    for (std::size_t i = 0; i < g.lead.size() && !redundant; ++i) {
      state = ac.next(state, g.lead[i]);
      for (std::uint32_t p : ac.outputs(state))
        if (p != pos) redundant = true;
    }
    out.push_back({g.id, g.label, redundant});
  }
  return out;
}

std::vector<ReducedViolation> check_reduced(const GeneratorSet& G) {
  std::vector<ReducedViolation> out;
  const AhoCorasick& ac = G.automaton();
  for (std::size_t pos = 0; pos < G.size(); ++pos) {
    const Generator& g = G[pos];
    for (const auto& t : g.poly.terms()) {
      bool reducible = false;
      int state = ac.root();
      for (std::size_t i = 0; i < t.word.size() && !reducible; ++i) {
        state = ac.next(state, t.word[i]);
        for (std::uint32_t p : ac.outputs(state))
          if (p != pos) reducible = true;
      }
      if (reducible) out.push_back({g.id, g.label, t.word});
    }
  }
  return out;
}

std::set<Word> leading_word_set(const GeneratorSet& G) {
  std::set<Word> out;
  for (const auto& g : G) out.insert(g.lead);
  return out;
}

bool same_initial_ideal(const GeneratorSet& a, const GeneratorSet& b, int bound) {
  auto covered = [bound](const GeneratorSet& from, const GeneratorSet& by) {
    for (const auto& g : from)
      if (static_cast<int>(g.lead.size()) <= bound && is_normal_word(g.lead, by)) return false;
    return true;
  };
  return covered(a, b) && covered(b, a);
}

}  // namespace ncgb
