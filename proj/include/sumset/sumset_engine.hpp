#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "sumset/integer_set.hpp"

namespace sumset {

enum class SumsetKind { Ordinary, Restricted, Signed, RestrictedSigned };

std::string_view to_string(SumsetKind kind);
std::optional<SumsetKind> parse_sumset_kind(std::string_view name);

struct SumsetResult {
  IntegerSet sums;
  SumsetKind kind;
  int h;
  std::size_t source_cardinality;
};

/// hA: λ_i ≥ 0, Σλ_i = h.
SumsetResult hfold_sumset(const IntegerSet& set, int h);

/// h^A: sums of h distinct elements. Requires h ≤ k.
SumsetResult restricted_sumset(const IntegerSet& set, int h);

/// h_±A: λ_i ∈ [−h, h], Σ|λ_i| = h.
SumsetResult signed_sumset(const IntegerSet& set, int h);

/// h^_±A: λ_i ∈ {−1, 0, 1} with exactly h nonzero. Requires h ≤ k.
///
/// Layered bitset DP. Layer j holds the partial sums that use j nonzero
/// coefficients among the elements seen so far, over the window [−S, S] where
/// S is the sum of the h largest magnitudes. Each element updates the layers in
/// place, j descending, via skip / +a / −a. An element equal to 0 still spends
/// one unit of weight.
SumsetResult restricted_signed_sumset(const IntegerSet& set, int h);

inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 24;

/// Budget from SUMSET_ORACLE_BUDGET when set and valid, else the default.
std::uint64_t oracle_budget_from_env();

/// Brute force over every C(k, h) support and 2^h sign pattern. Throws
/// OracleTooLarge when C(k, h) * 2^h exceeds `budget`.
SumsetResult restricted_signed_sumset_oracle(const IntegerSet& set, int h,
                                             std::uint64_t budget = kDefaultOracleBudget);

SumsetResult compute_sumset(SumsetKind kind, const IntegerSet& set, int h);

}  // namespace sumset
