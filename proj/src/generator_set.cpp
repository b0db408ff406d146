#include "ncgb/generator_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ncgb {

GeneratorSet::GeneratorSet() : automaton_(std::make_shared<const AhoCorasick>()) {}

GeneratorSet::GeneratorSet(std::vector<Generator> members) : members_(std::move(members)) {
  std::unordered_set<std::size_t> seen;
  std::vector<Word> leads;
  leads.reserve(members_.size());
  for (auto& g : members_) {
    if (g.poly.is_zero())
      throw std::invalid_argument("generator " + g.label + " is the zero polynomial");
    if (!seen.insert(g.id).second)
      throw std::invalid_argument("duplicate generator id " + std::to_string(g.id));
    g.poly = g.poly.monic();
    g.lead = g.poly.leading_word();
    if (g.lead.empty())
      throw std::invalid_argument("generator " + g.label + " has a constant leading term");
    leads.push_back(g.lead);
  }
  automaton_ = std::make_shared<const AhoCorasick>(leads);
}

GeneratorSet GeneratorSet::from_polynomials(const std::vector<Polynomial>& polys,
                                            const std::string& prefix) {
  std::vector<Generator> members;
  members.reserve(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    members.push_back({i, prefix + std::to_string(i), polys[i], {}});
  return GeneratorSet(std::move(members));
}

std::optional<std::size_t> GeneratorSet::position_of(std::size_t id) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].id == id) return i;
  return std::nullopt;
}

const Generator& GeneratorSet::by_id(std::size_t id) const {
  auto pos = position_of(id);
  if (!pos) throw std::out_of_range("no generator with id " + std::to_string(id));
  return members_[*pos];
}

const Generator* GeneratorSet::find_label(const std::string& label) const {
  for (const auto& g : members_)
    if (g.label == label) return &g;
  return nullptr;
}

GeneratorSet GeneratorSet::filter(const std::function<bool(const Generator&)>& keep) const {
  std::vector<Generator> kept;
  for (const auto& g : members_)
    if (keep(g)) kept.push_back(g);
  return GeneratorSet(std::move(kept));
}

GeneratorSet GeneratorSet::extended(
    const std::vector<std::pair<std::string, Polynomial>>& more) const {
  std::vector<Generator> all = members_;
  std::size_t id = next_id();
  for (const auto& [label, p] : more) all.push_back({id++, label, p, {}});
  return GeneratorSet(std::move(all));
}

std::size_t GeneratorSet::next_id() const noexcept {
  std::size_t id = 0;
  for (const auto& g : members_) id = std::max(id, g.id + 1);
  return id;
}

int GeneratorSet::max_degree() const noexcept {
  int d = 0;
  for (const auto& g : members_) d = std::max(d, g.poly.degree());
  return d;
}

std::vector<Word> GeneratorSet::leading_words() const {
  std::vector<Word> out;
  out.reserve(members_.size());
  for (const auto& g : members_) out.push_back(g.lead);
  return out;
}

}  // namespace ncgb
