#include "ncgb/endo.hpp"

#include <set>
#include <stdexcept>

#include "ncgb/rewrite.hpp"

namespace ncgb {

Word Endomorphism::image(int variable) const {
  if (auto it = images_.find(variable); it != images_.end()) return it->second;
  if (total_) return Word::letter(variable);
  throw std::domain_error("variable x" + std::to_string(variable) + " has no image");
}

Word Endomorphism::apply(const Word& w) const {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) out *= image(w[i]);
  return out;
}

Polynomial Endomorphism::apply(const Polynomial& f) const {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({apply(t.word), t.coeff});
  return Polynomial::from_terms(std::move(terms));
}

Endomorphism Endomorphism::compose(const Endomorphism& inner) const {
  std::map<int, Word> images;
  for (const auto& [v, w] : inner.images_) images[v] = apply(w);
  if (inner.total_)
    for (const auto& [v, w] : images_)
      if (!images.count(v)) images[v] = w;
  return Endomorphism(std::move(images), total_ && inner.total_);
}

std::string Endomorphism::to_string() const {
  if (images_.empty()) return total_ ? "id" : "{}";
  std::string s;
  for (const auto& [v, w] : images_) {
    if (!s.empty()) s += ',';
    s += "x" + std::to_string(v) + "->" + w.to_string();
  }
  return s;
}

Polynomial apply_endo(const Endomorphism& phi, const Polynomial& f) { return phi.apply(f); }

SemigroupSpec semigroup_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "order_preserving") {
    OrderPreservingMaps s{j.at("k").get<int>(), j.at("n").get<int>()};
    if (s.k < 1 || s.n < 1) throw std::invalid_argument("order_preserving needs k, n >= 1");
    return s;
  }
  if (kind == "tideal") {
    TIdealMaps s{j.at("n").get<int>(), j.value("x5_bound", 0)};
    if (s.n < 1 || s.x5_bound < 0) throw std::invalid_argument("tideal needs n >= 1, x5_bound >= 0");
    return s;
  }
  throw std::invalid_argument("unknown semigroup kind '" + kind + "'");
}

nlohmann::json semigroup_to_json(const SemigroupSpec& spec) {
  if (const auto* op = std::get_if<OrderPreservingMaps>(&spec))
    return {{"kind", "order_preserving"}, {"k", op->k}, {"n", op->n}};
  const auto& t = std::get<TIdealMaps>(spec);
  return {{"kind", "tideal"}, {"n", t.n}, {"x5_bound", t.x5_bound}};
}

namespace {

void increasing_maps(int vars, int n, std::vector<int>& cur, std::vector<Endomorphism>& out) {
  if (static_cast<int>(cur.size()) == vars) {
    std::map<int, Word> images;
    for (int i = 0; i < vars; ++i) images[i + 1] = Word::letter(cur[i]);
    out.emplace_back(std::move(images));
    return;
  }
  int lo = cur.empty() ? 1 : cur.back() + 1;
  int slots_left = vars - static_cast<int>(cur.size()) - 1;
  for (int v = lo; v + slots_left <= n; ++v) {
    cur.push_back(v);
    increasing_maps(vars, n, cur, out);
    cur.pop_back();
  }
}

void ascending_words(int n, int max_len, int from, Word& cur, std::vector<Word>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == max_len) return;
  for (int v = from; v <= n; ++v) {
    cur.push_back(v);
    ascending_words(n, max_len, v, cur, out);
    cur.pop_back();
  }
}

bool is_identity_on(const Endomorphism& phi, int vars) {
  for (int v = 1; v <= vars; ++v)
    if (phi.has_image(v) && phi.image(v) != Word::letter(v)) return false;
  return true;
}

}  // namespace

std::vector<Endomorphism> semigroup_maps(const SemigroupSpec& spec, int vars) {
  std::vector<Endomorphism> out{Endomorphism::identity()};
  if (const auto* op = std::get_if<OrderPreservingMaps>(&spec)) {
    if (vars < 1 || vars > op->k) return out;
    std::vector<int> cur;
    std::vector<Endomorphism> maps;
    increasing_maps(vars, op->n, cur, maps);
    for (auto& m : maps)
      if (!is_identity_on(m, vars)) out.push_back(std::move(m));
    return out;
  }
  const auto& t = std::get<TIdealMaps>(spec);
  std::vector<Word> x5_images;
  Word scratch;
  ascending_words(t.n, t.x5_bound, 1, scratch, x5_images);
  const int free_vars = std::min(vars, 4);
  std::vector<int> choice(static_cast<std::size_t>(free_vars), 1);
  // Odometer over x1..x4 -> variables, then over the x5 image.
  for (;;) {
    std::vector<Word> fifth = vars >= 5 ? x5_images : std::vector<Word>{Word{}};
    for (const auto& w5 : fifth) {
      std::map<int, Word> images;
      for (int i = 0; i < free_vars; ++i) images[i + 1] = Word::letter(choice[i]);
      if (vars >= 5) images[5] = w5;
      Endomorphism phi(std::move(images), true);
      if (!is_identity_on(phi, vars)) out.push_back(std::move(phi));
    }
    int i = free_vars - 1;
    while (i >= 0 && choice[i] == t.n) choice[i--] = 1;
    if (i < 0) break;
    ++choice[i];
  }
  return out;
}

bool belongs_to(const SemigroupSpec& spec, const Endomorphism& phi, int vars) {
  if (is_identity_on(phi, vars)) return true;
  if (const auto* op = std::get_if<OrderPreservingMaps>(&spec)) {
    if (vars > op->k) return false;
    int last = 0;
    for (int v = 1; v <= vars; ++v) {
      if (!phi.has_image(v)) return false;
      Word w = phi.image(v);
      if (w.size() != 1 || w[0] <= last || w[0] > op->n) return false;
      last = w[0];
    }
    return true;
  }
  const auto& t = std::get<TIdealMaps>(spec);
  for (int v = 1; v <= vars; ++v) {
    if (!phi.has_image(v)) return false;
    Word w = phi.image(v);
    if (v <= 4) {
      if (w.size() != 1 || w[0] > t.n) return false;
    } else if (v == 5) {
      if (static_cast<int>(w.size()) > t.x5_bound) return false;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] > t.n || (i > 0 && w[i] < w[i - 1])) return false;
    } else if (w != Word::letter(v)) {
      return false;
    }
  }
  return true;
}

GeneratorSet enumerate_semigroup_images(const SemigroupSpec& spec, const std::vector<Polynomial>& B,
                                        int degree_bound) {
  // The maps act on Q<x1..xn>; images outside it (only possible through the
  // adjoined identity) are not part of the orbit.
  const int n = std::visit([](const auto& s) { return s.n; }, spec);
  std::set<Polynomial> seen;
  std::vector<Generator> members;
  for (std::size_t bi = 0; bi < B.size(); ++bi) {
    const Polynomial& b = B[bi];
    if (b.is_zero()) continue;
    for (const auto& phi : semigroup_maps(spec, b.max_variable())) {
      Polynomial img = phi.apply(b);
      if (img.is_zero() || img.degree() > degree_bound || img.max_variable() > n) continue;
      img = img.monic();
      if (!seen.insert(img).second) continue;
      std::size_t id = members.size();
      members.push_back({id, "b" + std::to_string(bi) + "{" + phi.to_string() + "}", img, {}});
    }
  }
  return GeneratorSet(std::move(members));
}

bool check_s_invariance(const GeneratorSet& generators, const SemigroupSpec& spec, int bound,
                        const GeneratorSet& basis) {
  for (const auto& g : generators) {
    for (const auto& phi : semigroup_maps(spec, g.poly.max_variable())) {
      Polynomial img = phi.apply(g.poly);
      if (img.degree() > bound) continue;
      if (!reduce(img, basis).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace ncgb
