#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ncgb/polynomial.hpp"

namespace ncgb {

/// How the seed is closed before spanning the ideal.
enum class SubstitutionClosure {
  None,       // the ideal generated by the seed itself
  Variables,  // all images under x_i -> x_j
  Words,      // all images under x_i -> nonempty word (the T-ideal of the seed)
};

struct OracleOptions {
  SubstitutionClosure closure = SubstitutionClosure::None;
  /// Largest multihomogeneous component (number of words) handled densely.
  std::size_t max_component_words = 20000;
};

class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Brute-force dimension of multihomogeneous components of the two-sided
/// ideal generated by a (closed) seed: the component of multidegree md is
/// spanned by the seed images of multidegree md together with x_a * I and
/// I * x_a for the components of multidegree md - e_a, and is row-reduced
/// over Q.  Components are memoized, so one oracle should be reused across
/// multidegrees.  Not thread-safe.
class IdealDimensionOracle {
 public:
  /// Seed members must be multihomogeneous (std::invalid_argument otherwise).
  explicit IdealDimensionOracle(std::vector<Polynomial> seed, OracleOptions options = {});

  std::size_t dimension(const Multidegree& md);
  /// Leading words of the ideal component (the pivot columns).
  std::vector<Word> leading_words(const Multidegree& md);

 private:
  struct SparseRow {
    std::vector<std::pair<std::size_t, Rational>> entries;  // ascending column, first entry is the pivot (= 1)
  };
  struct Component {
    std::vector<Word> words;  // columns, deg-lex descending
    std::unordered_map<Word, std::size_t> column;
    std::vector<SparseRow> basis;  // sorted by pivot column
  };

  const Component& component(const Multidegree& md);
  std::vector<Polynomial> seed_images(const Multidegree& md) const;

  std::vector<Polynomial> seed_;
  std::vector<Multidegree> seed_md_;
  OracleOptions options_;
  std::map<Multidegree, std::unique_ptr<Component>> memo_;
};

std::size_t ideal_dimension_oracle(const std::vector<Polynomial>& seed, const Multidegree& md,
                                   const OracleOptions& options = {});

}  // namespace ncgb
