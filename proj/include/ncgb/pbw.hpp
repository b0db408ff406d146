#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncgb/polynomial.hpp"
#include "ncgb/word.hpp"

namespace ncgb {

/// A commutator [x_j, x_k] with j > k, stored as (j, k).
using IndexPair = std::pair<int, int>;

/// x_{i1} ... x_{il} [x_{j1},x_{k1}] ... [x_{jm},x_{km}] with i ascending,
/// pairs ascending lexicographically and j_s > k_s.
struct PBWIndex {
  std::vector<int> letters;
  std::vector<IndexPair> pairs;

  bool admissible() const;
  std::size_t degree() const { return letters.size() + 2 * pairs.size(); }
  Multidegree multidegree(std::size_t n) const;
  /// "1,2,2,(2,1),(3,1)"; the empty index prints as "".
  std::string to_string() const;
  /// The element x_{i1}...x_{il}[x_{j1},x_{k1}]... of Q<X>.
  Polynomial element() const;

  bool operator==(const PBWIndex&) const = default;
};

/// Same shape as PBWIndex; admissible when the pair indices interlace
/// k1 < j1 < k2 < j2 < ... < km < jm.
struct GrassmannIndex {
  std::vector<int> letters;
  std::vector<IndexPair> pairs;

  bool admissible() const;
  Multidegree multidegree(std::size_t n) const;
  std::string to_string() const;
  Polynomial element() const;

  bool operator==(const GrassmannIndex&) const = default;
};

/// Parses the to_string() form; throws std::invalid_argument.
PBWIndex parse_pbw_index(const std::string& text);

std::vector<PBWIndex> pbw_basis(const Multidegree& md);
std::size_t pbw_count(const Multidegree& md);
std::vector<GrassmannIndex> grassmann_basis(const Multidegree& md);
std::size_t grassmann_count(const Multidegree& md);

/// Conditions (i) and (ii) characterizing the normal words modulo the
/// gamma3 ideal.
bool gamma3_normal_predicate(const Word& w);

/// PBW index -> normal word.  Throws std::invalid_argument if u is not admissible.
Word psi(const PBWIndex& u);
/// Normal word -> PBW index.  Throws std::invalid_argument if w is not normal.
PBWIndex theta(const Word& w);

/// x1^{a1} (x2x1)^{b21} x2^{a2} (x3x1)^{b31} (x3x2)^{b32} x3^{a3} ...
struct CanonicalFactorization {
  std::vector<int> a;                 // a[i-1] = a_i
  std::map<IndexPair, int> b;         // b[(i,j)] = b_{ij}, nonzero entries only

  Word expand() const;
  /// "x1(x2x1)^2x2^3(x3x1)"; the empty word prints as "1".
  std::string to_string() const;
};

/// Throws std::invalid_argument unless gamma3_normal_predicate(w).
CanonicalFactorization canonical_factorization(const Word& w);

}  // namespace ncgb
