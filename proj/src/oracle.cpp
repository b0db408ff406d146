#include "ncgb/oracle.hpp"

#include <algorithm>
#include <set>

namespace ncgb {

namespace {

Multidegree padded(const Multidegree& md, std::size_t n) {
  Multidegree r = md;
  if (r.size() < n) r.exponents.resize(n, 0);
  return r;
}

bool same_multidegree(const Multidegree& a, const Multidegree& b) {
  std::size_t n = std::max(a.size(), b.size());
  return padded(a, n) == padded(b, n);
}

// Number of words of a multidegree, saturating at `cap + 1`.
std::size_t multinomial_capped(const Multidegree& md, std::size_t cap) {
  // Build the multinomial as a product of binomials, each computed exactly.
  mpz_class total = 1;
  int placed = 0;
  for (int e : md.exponents) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(placed + e), static_cast<unsigned long>(e));
    total *= b;
    placed += e;
    if (total > cap) return cap + 1;
  }
  return total.get_ui();
}

}  // namespace

IdealDimensionOracle::IdealDimensionOracle(std::vector<Polynomial> seed, OracleOptions options)
    : options_(options) {
  for (auto& s : seed) {
    if (s.is_zero()) continue;
    if (!s.is_multihomogeneous())
      throw std::invalid_argument("oracle seed must be multihomogeneous: " + s.to_string());
    seed_md_.push_back(multidegree_of(s.leading_word(), static_cast<std::size_t>(s.max_variable())));
    seed_.push_back(std::move(s));
  }
}

std::vector<Polynomial> IdealDimensionOracle::seed_images(const Multidegree& md) const {
  std::set<Polynomial> images;
  const std::size_t n = md.size();
  for (std::size_t si = 0; si < seed_.size(); ++si) {
    const Polynomial& s = seed_[si];
    const Multidegree& smd = seed_md_[si];
    if (options_.closure == SubstitutionClosure::None) {
      if (same_multidegree(smd, md)) images.insert(s.monic());
      continue;
    }
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < smd.size(); ++i)
      if (smd[i] > 0) vars.push_back(i);
    std::vector<Word> assignment(smd.size(), Word::letter(1));
    Multidegree remaining = md;

    // Depth-first choice of an image for each occurring variable.
    auto rec = [&](auto&& self, std::size_t depth) -> void {
      if (depth == vars.size()) {
        if (remaining.total() != 0) return;
        Polynomial img = substitute(s, assignment);
        if (!img.is_zero()) images.insert(img.monic());
        return;
      }
      const int mult = smd[vars[depth]];
      const int max_len = options_.closure == SubstitutionClosure::Variables ? 1 : remaining.total() / mult;
      for (int len = 1; len <= max_len; ++len) {
        for (const auto& e : multidegrees_of_total(n, len)) {
          bool fits = true;
          for (std::size_t a = 0; a < n; ++a)
            if (mult * e[a] > remaining[a]) fits = false;
          if (!fits) continue;
          for (std::size_t a = 0; a < n; ++a) remaining[a] -= mult * e[a];
          for (const auto& w : words_of_multidegree(e)) {
            assignment[vars[depth]] = w;
            self(self, depth + 1);
          }
          for (std::size_t a = 0; a < n; ++a) remaining[a] += mult * e[a];
        }
      }
    };
    rec(rec, 0);
  }
  return {images.begin(), images.end()};
}

const IdealDimensionOracle::Component& IdealDimensionOracle::component(const Multidegree& md) {
  if (auto it = memo_.find(md); it != memo_.end()) return *it->second;

  const std::size_t count = multinomial_capped(md, options_.max_component_words);
  if (count > options_.max_component_words)
    throw ResourceLimitExceeded("component " + md.to_string() + " exceeds " +
                                std::to_string(options_.max_component_words) + " words");

  auto comp = std::make_unique<Component>();
  comp->words = words_of_multidegree(md);
  std::reverse(comp->words.begin(), comp->words.end());
  for (std::size_t i = 0; i < comp->words.size(); ++i) comp->column.emplace(comp->words[i], i);
  const std::size_t width = comp->words.size();

  std::vector<Rational> row(width);
  auto insert = [&](Component& c) {
    if (c.basis.size() == width) return;
    for (const auto& pivot : c.basis) {
      Rational f = row[pivot.entries.front().first];
      if (is_zero(f)) continue;
      for (const auto& [col, v] : pivot.entries) row[col] -= f * v;
    }
    std::size_t p = 0;
    while (p < width && is_zero(row[p])) ++p;
    if (p == width) return;
    SparseRow fresh;
    Rational inv = 1 / row[p];
    for (std::size_t j = p; j < width; ++j)
      if (!is_zero(row[j])) fresh.entries.emplace_back(j, row[j] * inv);
    auto pos = std::lower_bound(c.basis.begin(), c.basis.end(), p, [](const SparseRow& r, std::size_t key) {
      return r.entries.front().first < key;
    });
    c.basis.insert(pos, std::move(fresh));
  };
  auto clear_row = [&] {
    for (auto& v : row) v = 0;
  };

  for (std::size_t a = 0; a < md.size(); ++a) {
    if (md[a] == 0) continue;
    Multidegree lower = md;
    --lower[a];
    const Component& sub = component(lower);
    const Word letter = Word::letter(static_cast<int>(a) + 1);
    for (int side = 0; side < 2; ++side) {
      for (const auto& r : sub.basis) {
        clear_row();
        for (const auto& [col, v] : r.entries) {
          const Word& w = sub.words[col];
          row[comp->column.at(side == 0 ? letter * w : w * letter)] = v;
        }
        insert(*comp);
      }
    }
  }
  for (const auto& img : seed_images(md)) {
    clear_row();
    for (const auto& t : img.terms()) row[comp->column.at(t.word)] = t.coeff;
    insert(*comp);
  }

  auto [it, inserted] = memo_.emplace(md, std::move(comp));
  return *it->second;
}

std::size_t IdealDimensionOracle::dimension(const Multidegree& md) { return component(md).basis.size(); }

std::vector<Word> IdealDimensionOracle::leading_words(const Multidegree& md) {
  const Component& c = component(md);
  std::vector<Word> out;
  for (const auto& r : c.basis) out.push_back(c.words[r.entries.front().first]);
  return out;
}

std::size_t ideal_dimension_oracle(const std::vector<Polynomial>& seed, const Multidegree& md,
                                   const OracleOptions& options) {
  IdealDimensionOracle oracle(seed, options);
  return oracle.dimension(md);
}

}  // namespace ncgb
