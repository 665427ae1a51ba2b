#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumset/bounds.hpp"
#include "sumset/integer_set.hpp"

namespace sumset {

enum class StructureKind {
  DilatedInterval,         // d * [0, k-1]
  DilatedIntervalFromOne,  // d * [1, k]
  DilatedOddAp,            // d * {1, 3, ..., 2k-1}
  ExceptionalH4K5,         // d * {0, 1, 2, 4, 6}
  TriplePlusSum,           // {a, b, a + b}, 0 < a < b
  ZeroTriplePlusSum,       // {0, a, b, a + b}, 0 < a < b
  PlainAp,                 // any k-term AP, difference d
  Other,
};

std::string_view to_string(StructureKind kind);

/// A structural family together with its dilation witness. `d` is 0 for the
/// families that carry no witness.
struct StructureClass {
  StructureKind kind = StructureKind::Other;
  Int d = 0;

  friend bool operator==(const StructureClass&, const StructureClass&) = default;
};

/// `DilatedInterval(3)`, `TriplePlusSum`, ...
std::string to_string(const StructureClass& cls);

/// Every family containing the set, in StructureKind order; {Other} if none.
std::vector<StructureClass> classify(const IntegerSet& set);

struct InversePrediction {
  BoundKind bound_kind;
  int h = 0;
  std::size_t k = 0;
  std::vector<StructureKind> allowed;

  bool admits(const std::vector<StructureClass>& classes) const;
};

/// Cells without an inverse statement return nullopt; (h, k) outside the
/// kind's hypothesis throws InapplicableBound.
std::optional<InversePrediction> find_prediction(BoundKind kind, int h, std::size_t k);

/// Like find_prediction, but an uncovered cell is also an InapplicableBound error.
InversePrediction predicted_structures(BoundKind kind, int h, std::size_t k);

struct InverseOutcome {
  Int bound = 0;
  Int actual = 0;
  bool equality = false;
  std::vector<StructureClass> classes;  // filled only on equality
  /// nullopt when equality held in a cell with no inverse statement.
  std::optional<bool> prediction_matched;

  bool holds() const noexcept { return !equality || prediction_matched.value_or(true); }
};

/// Evaluates the inverse implication for one row of a bound report.
InverseOutcome evaluate_inverse(const BoundReport& report, BoundKind kind);

/// True iff |sumset| != bound, or the set belongs to one of the predicted
/// families. Throws InapplicableBound when `kind` does not apply to (A, h).
bool verify_inverse_instance(const IntegerSet& set, int h, BoundKind kind);

}  // namespace sumset
