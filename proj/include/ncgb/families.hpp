#pragma once

#include <string>
#include <vector>

#include "ncgb/generator_set.hpp"
#include "ncgb/polynomial.hpp"

namespace ncgb {

/// One member of a named generator family, e.g. v'_{ijka}.
struct FamilyMember {
  std::string family;              // "f'", "f''", "g'", "g''", "h", "t", "u'", "u''", "v'", "v''", "w'", "w''"
  std::vector<int> indices;        // in subscript order (g'' is indexed i,k,j)
  std::vector<int> exponents;      // a_j..a_{i-1} for v/w families, else empty
  Polynomial poly;

  /// Short id used as the generator label: "t[2,1]", "g''[3,1,2]", "v'[4,2,1;1,0]".
  std::string id() const;
  /// Named form: "v'[i=4,j=2,k=1,a=(1,0)]".
  std::string dump() const;
};

/// f'_{ij}, f''_{ij} (i>j), g'_{ijk}, g''_{ikj}, h_{ijk} (i>j>k), indices <= n.
std::vector<FamilyMember> gamma3_members(int n);
/// f', f'', g', g'', t, u', u'', v', v'', w', w'' with total degree <= bound.
std::vector<FamilyMember> tideal_members(int n, int bound);

GeneratorSet to_generator_set(const std::vector<FamilyMember>& members);

/// Throws std::invalid_argument for n < 2.
GeneratorSet gamma3_basis(int n);
/// Throws std::invalid_argument for n < 2.
GeneratorSet tideal_basis(int n, int bound);

/// A selector is either a family name ("h", "v''") or a member id ("t[2,1]").
bool matches_selector(const std::string& label, const std::string& selector);

/// All [[x_i,x_j],x_k], i,j,k <= n, nonzero, deduplicated up to sign.
std::vector<Polynomial> gamma3_commutator_generators(int n);

/// [[x2,x1],x1], [x2,[x2,x1]], [x3,[x2,x1]], [[x3,x1],x2], [[x3,x2],[x3,x1]].
std::vector<Polynomial> sbasis_gamma3();
/// [[x1,x2],x3], [x1,x2]x5[x3,x4] + [x1,x3]x5[x2,x4].
std::vector<Polynomial> sbasis_tideal();

/// Variable instances (indices <= n) of
///   [x1,x2]x3 - x3[x1,x2],  [x1,x2][x1,x3],  [x1,x2]x4[x1,x3],
///   [x1,x2][x3,x4] + [x1,x3][x2,x4],  [x1,x2]x5[x3,x4] + [x1,x3]x5[x2,x4],
/// nonzero and deduplicated up to scalars.
std::vector<Polynomial> latyshev_identities(int n);

}  // namespace ncgb
