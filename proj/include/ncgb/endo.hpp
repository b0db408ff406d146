#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ncgb/generator_set.hpp"
#include "ncgb/polynomial.hpp"

namespace ncgb {

/// An endomorphism of Q<X> with monomial images.  Variables without an
/// explicit image are fixed when the map is `total`; otherwise applying the
/// map to them is a domain error.
class Endomorphism {
 public:
  Endomorphism() = default;
  explicit Endomorphism(std::map<int, Word> images, bool total = false)
      : images_(std::move(images)), total_(total) {}

  static Endomorphism identity() { return Endomorphism({}, true); }

  bool has_image(int variable) const { return total_ || images_.count(variable) != 0; }
  Word image(int variable) const;
  const std::map<int, Word>& images() const noexcept { return images_; }

  Word apply(const Word& w) const;
  Polynomial apply(const Polynomial& f) const;

  /// (this o inner)(x) = this(inner(x)).
  Endomorphism compose(const Endomorphism& inner) const;

  /// "x1->x3,x2->x1*x2"; the identity prints as "id".
  std::string to_string() const;

 private:
  std::map<int, Word> images_;
  bool total_ = false;
};

Polynomial apply_endo(const Endomorphism& phi, const Polynomial& f);

/// Maps x1 < ... < xj (j <= k) into x1..xn, strictly increasing.  A
/// polynomial in x1..xm is acted on by the maps with j = m.
struct OrderPreservingMaps {
  int k = 3;
  int n = 3;
};

/// Maps sending x1..x4 to arbitrary variables of x1..xn and x5 to an
/// ascending product x1^a1 ... xn^an of length <= x5_bound (the empty
/// product included).  Variables above x5 are fixed.
struct TIdealMaps {
  int n = 5;
  int x5_bound = 2;
};

using SemigroupSpec = std::variant<OrderPreservingMaps, TIdealMaps>;

/// {"kind":"order_preserving","k":3,"n":5} or {"kind":"tideal","n":4,"x5_bound":3}.
SemigroupSpec semigroup_from_json(const nlohmann::json& j);
nlohmann::json semigroup_to_json(const SemigroupSpec& spec);

/// The enumerated maps acting on polynomials in x1..x_vars, identity first.
std::vector<Endomorphism> semigroup_maps(const SemigroupSpec& spec, int vars);

/// Membership of a map in the enumerated family (used for closure checks).
bool belongs_to(const SemigroupSpec& spec, const Endomorphism& phi, int vars);

/// Distinct monic images phi(b), b in B, of degree <= degree_bound and in
/// the variables x1..xn of the semigroup.
GeneratorSet enumerate_semigroup_images(const SemigroupSpec& spec, const std::vector<Polynomial>& B,
                                        int degree_bound);

/// Every phi(g) of degree <= bound reduces to zero modulo `basis`.
bool check_s_invariance(const GeneratorSet& generators, const SemigroupSpec& spec, int bound,
                        const GeneratorSet& basis);

}  // namespace ncgb
