#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "sumset/integer_set.hpp"
#include "sumset/sumset_engine.hpp"

namespace sumset {

enum class BoundKind {
  RestrictedDirect,       // |h^A| >= hk - h^2 + 1
  SignedPositiveGeneral,  // positive A: 2(hk - h^2) + h(h+1)/2 + 1
  SignedNonnegGeneral,    // 0 in A: 2(hk - h^2) + h(h-1)/2 + 1
  PositiveMidRange,       // positive A, 3 <= h <= k-1: 2hk - h^2 + 1
  NonnegMidRange,         // 0 in A, 3 <= h <= k-1, k >= 5: 2hk - h(h+1) + 1
  PositiveFullK,          // positive A, h = k: h(h+1)/2 + 1
  NonnegFullK,            // 0 in A, h = k: h(h-1)/2 + 1
  HPlusOneCase,           // 0 in A, k = h+1: h^2 + h + 1
};

inline constexpr std::array<BoundKind, 8> kAllBoundKinds = {
    BoundKind::RestrictedDirect, BoundKind::SignedPositiveGeneral, BoundKind::SignedNonnegGeneral,
    BoundKind::PositiveMidRange, BoundKind::NonnegMidRange,        BoundKind::PositiveFullK,
    BoundKind::NonnegFullK,      BoundKind::HPlusOneCase,
};

std::string_view to_string(BoundKind kind);
/// Accepts the enum spelling or kebab/snake case, case-insensitively.
std::optional<BoundKind> parse_bound_kind(std::string_view name);

enum class BoundStatus { Proved, Conjectured };

/// Admissible (h, k): h_min <= h <= k - k_gap (h == k - k_gap when exact), k >= k_min.
struct Hypothesis {
  bool requires_zero = false;      // 0 in A and every element nonnegative
  bool requires_positive = false;  // every element positive
  int h_min = 1;
  int k_gap = 0;
  bool exact = false;
  int k_min = 1;

  bool admits(int h, std::size_t k) const noexcept;
};

const Hypothesis& hypothesis(BoundKind kind);
BoundStatus bound_status(BoundKind kind);
/// RestrictedDirect is measured on h^A, every other bound on h^_±A.
SumsetKind subject_sumset(BoundKind kind);

/// Throws InapplicableBound when (h, k) is outside the kind's range.
Int lower_bound(BoundKind kind, int h, std::size_t k);

/// Kinds whose hypotheses A and (h, k) meet, in enum order. Sets with negative
/// elements and A ∩ (−A) ⊆ {0} are judged through abs_set(A).
std::vector<BoundKind> applicable_bounds(const IntegerSet& set, int h);

struct BoundRow {
  BoundKind kind;
  Int bound = 0;
  Int actual = 0;
  bool satisfied = false;
  bool is_equality = false;
  BoundStatus status = BoundStatus::Proved;

  /// A failed proved bound means the engine is wrong, not the bound.
  bool is_engine_bug() const noexcept { return !satisfied && status == BoundStatus::Proved; }
};

struct BoundReport {
  IntegerSet set;
  /// abs_set(set) when the abs reduction applied, otherwise set itself.
  IntegerSet analyzed;
  int h = 0;
  bool abs_reduced = false;
  std::vector<BoundRow> rows;

  const BoundRow* find(BoundKind kind) const noexcept;
  /// The set whose structure the kind's inverse statement speaks about.
  const IntegerSet& subject(BoundKind kind) const noexcept;
};

BoundReport check_bounds(const IntegerSet& set, int h);

}  // namespace sumset
