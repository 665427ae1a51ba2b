#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumset/bounds.hpp"
#include "sumset/integer_set.hpp"
#include "sumset/inverse_analysis.hpp"

namespace sumset {

enum class SetConstraint {
  ContainsZero,  // 0 = a_1 < ... < a_k <= M
  AllPositive,   // 1 <= a_1 < ... < a_k <= M
  AbsDisjoint,   // 0 in A ⊆ [−M, M], A ∩ (−A) = {0}
};

std::string_view to_string(SetConstraint constraint);
std::optional<SetConstraint> parse_constraint(std::string_view name);

enum class SearchMode { Direct, Inverse };

std::string_view to_string(SearchMode mode);

struct SearchConfig {
  std::size_t k = 1;
  int h = 1;
  Int max_element = 0;
  SetConstraint constraint = SetConstraint::ContainsZero;
  bool canonical_only = true;
  unsigned parallelism = 1;
  /// Bound whose equality cases are harvested. Defaults to the sharpest bound
  /// admissible for (h, k, constraint).
  std::optional<BoundKind> target;
  /// Stop after this many sets; the report is then flagged partial.
  std::optional<std::uint64_t> max_sets;
  /// Resume strictly after this set (lexicographic order).
  std::optional<IntegerSet> resume_after;
};

/// Throws InvalidConfig on k < 1, M < k − 1, h outside [1, k], or a target
/// whose hypothesis cannot hold under the constraint.
void validate(const SearchConfig& config);

BoundKind resolve_target(const SearchConfig& config);

/// Lexicographic stream of the sets selected by a config. Optionally
/// restricted to one prefix (the first min(k, 2) elements).
class SetEnumerator {
public:
  explicit SetEnumerator(const SearchConfig& config);
  SetEnumerator(const SearchConfig& config, std::vector<Int> prefix);

  std::optional<IntegerSet> next();

  /// Every feasible prefix, in lexicographic order.
  static std::vector<std::vector<Int>> prefixes(const SearchConfig& config);

private:
  bool accept(const std::vector<Int>& values) const;
  bool advance();

  SearchConfig config_;
  std::vector<Int> pool_;
  std::size_t fixed_ = 0;           // leading indices held constant
  std::vector<std::size_t> index_;  // current combination into pool_
  bool started_ = false;
  bool done_ = false;
};

std::vector<IntegerSet> enumerate_canonical_sets(const SearchConfig& config);

enum class ViolationType { BoundViolated, InverseMismatch };

std::string_view to_string(ViolationType type);

struct Violation {
  IntegerSet set;
  BoundKind kind;
  Int bound = 0;
  Int actual = 0;
  ViolationType type = ViolationType::BoundViolated;
};

struct EqualityCase {
  IntegerSet set;
  BoundKind kind;
  Int bound = 0;
  Int actual = 0;
  std::vector<StructureClass> classes;
  std::optional<bool> prediction_matched;
};

struct VerificationReport {
  SearchConfig config;
  SearchMode mode = SearchMode::Direct;
  BoundKind target = BoundKind::NonnegMidRange;
  std::uint64_t sets_checked = 0;
  std::vector<Violation> violations;
  std::vector<EqualityCase> equality_cases;
  /// Smallest target-sumset cardinality seen and every set attaining it.
  std::optional<Int> min_cardinality;
  std::vector<IntegerSet> minimizers;
  bool partial = false;
  std::optional<IntegerSet> last_set;
  std::chrono::milliseconds elapsed{0};
};

VerificationReport verify_direct(const SearchConfig& config);
VerificationReport verify_inverse(const SearchConfig& config);
VerificationReport run_search(const SearchConfig& config, SearchMode mode);

struct LemmaReduction {
  Int t = 0;
  Int base_size = 0;  // |h^_±B|, B the first h + 1 elements
  Int full_size = 0;  // |h^_±A|
  Int required = 0;   // 2hk − h² − h + 1 + t
  bool vacuous = false;
  bool holds = false;
};

/// Throws InapplicableBound unless 3 <= h <= k − 1, k >= 5 and 0 = min(A).
LemmaReduction lemma_reduction(const IntegerSet& set, int h);
bool lemma_reduction_check(const IntegerSet& set, int h);

enum class FixtureRelation { Equals, AtLeast, SetEquals };

struct FixtureRow {
  std::string name;
  IntegerSet set;
  int h = 0;
  FixtureRelation relation = FixtureRelation::Equals;
  Int expected = 0;  // cardinality (exact or lower bound)
  std::optional<IntegerSet> expected_set;
  Int actual = 0;
  bool pass = false;
};

struct FixtureReport {
  std::vector<FixtureRow> rows;

  bool all_passed() const noexcept;
};

FixtureReport fixture_suite();

}  // namespace sumset
