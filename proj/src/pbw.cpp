#include "ncgb/pbw.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ncgb {

namespace {

Multidegree index_multidegree(const std::vector<int>& letters, const std::vector<IndexPair>& pairs,
                              std::size_t n) {
  Multidegree md;
  int top = 0;
  for (int l : letters) top = std::max(top, l);
  for (const auto& [j, k] : pairs) top = std::max({top, j, k});
  md.exponents.assign(std::max(n, static_cast<std::size_t>(top)), 0);
  for (int l : letters) ++md[static_cast<std::size_t>(l - 1)];
  for (const auto& [j, k] : pairs) {
    ++md[static_cast<std::size_t>(j - 1)];
    ++md[static_cast<std::size_t>(k - 1)];
  }
  return md;
}

std::string index_string(const std::vector<int>& letters, const std::vector<IndexPair>& pairs) {
  std::string s;
  for (int l : letters) {
    if (!s.empty()) s += ',';
    s += std::to_string(l);
  }
  for (const auto& [j, k] : pairs) {
    if (!s.empty()) s += ',';
    s += "(" + std::to_string(j) + "," + std::to_string(k) + ")";
  }
  return s;
}

Polynomial index_element(const std::vector<int>& letters, const std::vector<IndexPair>& pairs) {
  Word w;
  for (int l : letters) w.push_back(l);
  Polynomial p(w);
  for (const auto& [j, k] : pairs) p = p * commutator(x(j), x(k));
  return p;
}

bool letters_valid(const std::vector<int>& letters) {
  for (std::size_t i = 0; i < letters.size(); ++i)
    if (letters[i] < 1 || letters[i] > kMaxVariable || (i > 0 && letters[i] < letters[i - 1])) return false;
  return true;
}

// The ascending word with the given multidegree.
std::vector<int> ascending_letters(const Multidegree& md) {
  std::vector<int> out;
  for (std::size_t i = 0; i < md.size(); ++i)
    for (int e = 0; e < md[i]; ++e) out.push_back(static_cast<int>(i) + 1);
  return out;
}

}  // namespace

bool PBWIndex::admissible() const {
  if (!letters_valid(letters)) return false;
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    const auto& [j, k] = pairs[s];
    if (k < 1 || j <= k || j > kMaxVariable) return false;
    if (s > 0 && pairs[s] < pairs[s - 1]) return false;
  }
  return true;
}

Multidegree PBWIndex::multidegree(std::size_t n) const { return index_multidegree(letters, pairs, n); }
std::string PBWIndex::to_string() const { return index_string(letters, pairs); }
Polynomial PBWIndex::element() const { return index_element(letters, pairs); }

bool GrassmannIndex::admissible() const {
  if (!letters_valid(letters)) return false;
  int last = 0;
  for (const auto& [j, k] : pairs) {
    if (k <= last || j <= k || j > kMaxVariable) return false;
    last = j;
  }
  return true;
}

Multidegree GrassmannIndex::multidegree(std::size_t n) const { return index_multidegree(letters, pairs, n); }
std::string GrassmannIndex::to_string() const { return index_string(letters, pairs); }
Polynomial GrassmannIndex::element() const { return index_element(letters, pairs); }

PBWIndex parse_pbw_index(const std::string& text) {
  PBWIndex u;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() -> int {
    skip();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw std::invalid_argument("expected an index at position " + std::to_string(start));
    return std::stoi(text.substr(start, i - start));
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c)
      throw std::invalid_argument(std::string("expected '") + c + "' at position " + std::to_string(i));
    ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] == '(') {
      ++i;
      int j = number();
      expect(',');
      int k = number();
      expect(')');
      u.pairs.emplace_back(j, k);
    } else {
      if (!u.pairs.empty()) throw std::invalid_argument("letters must precede pairs");
      u.letters.push_back(number());
    }
    skip();
    if (i < text.size()) expect(',');
    skip();
  }
  return u;
}

std::vector<PBWIndex> pbw_basis(const Multidegree& md) {
  std::vector<PBWIndex> out;
  const int n = static_cast<int>(md.size());
  Multidegree remaining = md;
  std::vector<IndexPair> pairs;
  auto rec = [&](auto&& self, IndexPair from) -> void {
    out.push_back({ascending_letters(remaining), pairs});
    for (int j = from.first; j <= n; ++j) {
      for (int k = (j == from.first ? from.second : 1); k < j; ++k) {
        auto& rj = remaining[static_cast<std::size_t>(j - 1)];
        auto& rk = remaining[static_cast<std::size_t>(k - 1)];
        if (rj == 0 || rk == 0) continue;
        --rj;
        --rk;
        pairs.emplace_back(j, k);
        self(self, IndexPair{j, k});
        pairs.pop_back();
        ++rj;
        ++rk;
      }
    }
  };
  rec(rec, IndexPair{2, 1});
  return out;
}

std::size_t pbw_count(const Multidegree& md) { return pbw_basis(md).size(); }

std::vector<GrassmannIndex> grassmann_basis(const Multidegree& md) {
  std::vector<GrassmannIndex> out;
  const int n = static_cast<int>(md.size());
  Multidegree remaining = md;
  std::vector<IndexPair> pairs;
  auto rec = [&](auto&& self, int next) -> void {
    out.push_back({ascending_letters(remaining), pairs});
    for (int k = next; k <= n; ++k) {
      if (remaining[static_cast<std::size_t>(k - 1)] == 0) continue;
      for (int j = k + 1; j <= n; ++j) {
        if (remaining[static_cast<std::size_t>(j - 1)] == 0) continue;
        --remaining[static_cast<std::size_t>(k - 1)];
        --remaining[static_cast<std::size_t>(j - 1)];
        pairs.emplace_back(j, k);
        self(self, j + 1);
        pairs.pop_back();
        ++remaining[static_cast<std::size_t>(k - 1)];
        ++remaining[static_cast<std::size_t>(j - 1)];
      }
    }
  };
  rec(rec, 1);
  return out;
}

std::size_t grassmann_count(const Multidegree& md) { return grassmann_basis(md).size(); }

bool gamma3_normal_predicate(const Word& w) {
  const std::size_t len = w.size();
  for (std::size_t k = 0; k + 1 < len; ++k) {
    if (w[k] <= w[k + 1]) continue;
    if (k + 2 < len && w[k] > w[k + 2]) return false;
    if (k > 0 && w[k - 1] >= w[k]) return false;
  }
  for (std::size_t k = 0; k + 3 < len; ++k) {
    if (w[k] == w[k + 2] && w[k] > w[k + 1] && w[k] > w[k + 3] && w[k + 1] > w[k + 3]) return false;
  }
  return true;
}

// Each step consumes one pair together with the letters below it, so the
// remaining input strictly shrinks.
Word psi(const PBWIndex& u) {
  if (!u.admissible()) throw std::invalid_argument("psi: index is not admissible: " + u.to_string());
  Word out;
  std::size_t next_letter = 0;
  for (const auto& [j, k] : u.pairs) {
    while (next_letter < u.letters.size() && u.letters[next_letter] < j) out.push_back(u.letters[next_letter++]);
    out.push_back(j);
    out.push_back(k);
  }
  while (next_letter < u.letters.size()) out.push_back(u.letters[next_letter++]);
  return out;
}

// Cut at the first descent; everything before it is a run of single
// letters, the descent itself is a pair, and the rest is handled again.
PBWIndex theta(const Word& w) {
  if (!gamma3_normal_predicate(w)) throw std::invalid_argument("theta: word is not normal: " + w.to_string());
  PBWIndex u;
  std::size_t pos = 0;
  while (pos < w.size()) {
    if (pos + 1 < w.size() && w[pos] > w[pos + 1]) {
      u.pairs.emplace_back(w[pos], w[pos + 1]);
      pos += 2;
    } else {
      u.letters.push_back(w[pos]);
      ++pos;
    }
  }
  return u;
}

Word CanonicalFactorization::expand() const {
  PBWIndex u;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int e = 0; e < a[i]; ++e) u.letters.push_back(static_cast<int>(i) + 1);
  for (const auto& [p, mult] : b)
    for (int e = 0; e < mult; ++e) u.pairs.push_back(p);
  return psi(u);
}

std::string CanonicalFactorization::to_string() const {
  int top = static_cast<int>(a.size());
  for (const auto& [p, mult] : b) top = std::max(top, p.first);
  auto power = [](int e) { return e > 1 ? "^" + std::to_string(e) : std::string(); };
  std::string s;
  for (int m = 1; m <= top; ++m) {
    for (int p = 1; p < m; ++p) {
      auto it = b.find({m, p});
      if (it == b.end() || it->second == 0) continue;
      s += "(x" + std::to_string(m) + "x" + std::to_string(p) + ")" + power(it->second);
    }
    int am = m <= static_cast<int>(a.size()) ? a[static_cast<std::size_t>(m - 1)] : 0;
    if (am > 0) s += "x" + std::to_string(m) + power(am);
  }
  return s.empty() ? "1" : s;
}

CanonicalFactorization canonical_factorization(const Word& w) {
  if (!gamma3_normal_predicate(w))
    throw std::invalid_argument("canonical_factorization: word is not normal: " + w.to_string());
  PBWIndex u = theta(w);
  CanonicalFactorization f;
  for (int l : u.letters) {
    if (static_cast<std::size_t>(l) > f.a.size()) f.a.resize(static_cast<std::size_t>(l), 0);
    ++f.a[static_cast<std::size_t>(l - 1)];
  }
  for (const auto& p : u.pairs) ++f.b[p];
  return f;
}

}  // namespace ncgb
