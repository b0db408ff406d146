#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncgb/generator_set.hpp"
#include "ncgb/rewrite.hpp"

namespace ncgb {

enum class ObstructionKind { Overlap, Inclusion };

/// A superposition of two leading words.  Both
/// first_left * g1 * first_right and second_left * g2 * second_right have
/// `superposition` as leading word; their difference is the S-polynomial.
///
/// Overlap: lt(g1) = AB, lt(g2) = BC with A, B, C nonempty, superposition ABC.
/// Inclusion: lt(g1) = A lt(g2) C, superposition lt(g1).
struct Obstruction {
  ObstructionKind kind = ObstructionKind::Overlap;
  std::size_t first_id = 0;
  std::size_t second_id = 0;
  Word superposition;
  Word first_left, first_right;
  Word second_left, second_right;
};

std::string to_string(ObstructionKind kind);

/// Every overlap (self-overlaps included) and inclusion between ordered
/// pairs of members whose superposition has degree <= bound.
std::vector<Obstruction> find_obstructions(const GeneratorSet& G, int bound);

Polynomial s_polynomial(const Obstruction& ob, const GeneratorSet& G);

struct FailedComposition {
  Obstruction obstruction;
  std::string first_label;
  std::string second_label;
  Polynomial remainder;
};

struct CompositionReport {
  int bound = 0;
  std::size_t checked = 0;
  std::vector<FailedComposition> failed;
  bool passed() const noexcept { return failed.empty(); }
  nlohmann::json to_json() const;
};

/// Reduces every S-polynomial of degree <= bound modulo G.
CompositionReport check_compositions(const GeneratorSet& G, int bound, int jobs = 1);

/// Degree-truncated completion.  The result contains (inter-reduced
/// versions of) the seed, is monic, minimal and tail-reduced, and every
/// composition of degree <= bound reduces to zero.  Seed members of degree
/// above the bound are dropped.
GeneratorSet complete_up_to_degree(const GeneratorSet& seed, int bound);

struct DimensionRow {
  Multidegree multidegree;
  std::size_t normal = 0;
  std::size_t reference = 0;
  std::optional<std::size_t> oracle;
  bool matches() const noexcept { return normal == reference; }
};

/// Normal-word count fell below the reference count: the reference basis
/// and the generator set cannot describe the same quotient.
class InconsistentReference : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct VerificationReport {
  int bound = 0;
  std::size_t n = 0;
  std::vector<DimensionRow> rows;
  std::optional<CompositionReport> compositions;
  bool members_reduce_to_zero = true;

  bool rows_match() const noexcept;
  std::vector<Multidegree> failed_rows() const;
  bool passed() const noexcept;
  /// {schema, bound, n, rows:[{multidegree, normal, reference, oracle?}],
  ///  compositions:{checked, failed:[...]}, verdict}
  nlohmann::json to_json() const;
};

inline constexpr const char* kReportSchema = "ncgb.verification/1";

using ReferenceCounter = std::function<std::size_t(const Multidegree&)>;

/// Compares normal-word counts with a reference quotient basis in every
/// multidegree of total degree <= bound.  Throws InconsistentReference if a
/// normal-word count is below the reference count.
VerificationReport verify_by_dimension(const GeneratorSet& G, const ReferenceCounter& reference,
                                       std::size_t n, int bound, int jobs = 1);

struct MinimalityEntry {
  std::size_t id = 0;
  std::string label;
  bool redundant = false;
};

/// For every member of degree <= bound: is lt(g) reducible by G \ {g}?
/// Members with variables above n are skipped.
std::vector<MinimalityEntry> check_minimality(const GeneratorSet& G, std::size_t n, int bound);

struct ReducedViolation {
  std::size_t id = 0;
  std::string label;
  Word monomial;
};

/// Monomials of members that are not normal with respect to the other
/// members.  Empty iff G is reduced.
std::vector<ReducedViolation> check_reduced(const GeneratorSet& G);

std::set<Word> leading_word_set(const GeneratorSet& G);

/// The initial ideals of a and b agree in every degree <= bound.
bool same_initial_ideal(const GeneratorSet& a, const GeneratorSet& b, int bound);

}  // namespace ncgb
