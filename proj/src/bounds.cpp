#include "sumset/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "sumset/error.hpp"

namespace sumset {

namespace {

struct BoundInfo {
  BoundKind kind;
  std::string_view name;
  Hypothesis hypothesis;
  BoundStatus status;
};

// clang-format off
constexpr std::array<BoundInfo, 8> kBoundTable = {{
    //                                          zero   pos    hmin gap exact kmin
    {BoundKind::RestrictedDirect,      "RestrictedDirect",      {false, false, 2, 2, false, 5}, BoundStatus::Proved},
    {BoundKind::SignedPositiveGeneral, "SignedPositiveGeneral", {false, true,  1, 0, false, 1}, BoundStatus::Proved},
    {BoundKind::SignedNonnegGeneral,   "SignedNonnegGeneral",   {true,  false, 1, 0, false, 1}, BoundStatus::Proved},
    {BoundKind::PositiveMidRange,      "PositiveMidRange",      {false, true,  3, 1, false, 4}, BoundStatus::Proved},
    {BoundKind::NonnegMidRange,        "NonnegMidRange",        {true,  false, 3, 1, false, 5}, BoundStatus::Proved},
    {BoundKind::PositiveFullK,         "PositiveFullK",         {false, true,  3, 0, true,  3}, BoundStatus::Proved},
    {BoundKind::NonnegFullK,           "NonnegFullK",           {true,  false, 3, 0, true,  3}, BoundStatus::Proved},
    {BoundKind::HPlusOneCase,          "HPlusOneCase",          {true,  false, 3, 1, true,  4}, BoundStatus::Proved},
}};
// clang-format on

const BoundInfo& info(BoundKind kind) {
  return kBoundTable[static_cast<std::size_t>(kind)];
}

std::string normalize(std::string_view name) {
  std::string key;
  for (char c : name) {
    if (c == '-' || c == '_' || c == ' ') continue;
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return key;
}

bool all_nonnegative_with_zero(const IntegerSet& set) { return set.min() == 0; }
bool all_positive(const IntegerSet& set) { return set.min() > 0; }

bool admits_set(const Hypothesis& hyp, const IntegerSet& set, int h) {
  if (hyp.requires_zero && !all_nonnegative_with_zero(set)) return false;
  if (hyp.requires_positive && !all_positive(set)) return false;
  return hyp.admits(h, set.size());
}

bool wants_abs_reduction(const IntegerSet& set) { return set.min() < 0 && is_abs_disjoint(set); }

}  // namespace

bool Hypothesis::admits(int h, std::size_t k) const noexcept {
  const auto kk = static_cast<long long>(k);
  if (kk < k_min || h < h_min) return false;
  return exact ? h == kk - k_gap : h <= kk - k_gap;
}

std::string_view to_string(BoundKind kind) { return info(kind).name; }

std::optional<BoundKind> parse_bound_kind(std::string_view name) {
  const std::string key = normalize(name);
  for (const BoundInfo& row : kBoundTable) {
    if (normalize(row.name) == key) return row.kind;
  }
  return std::nullopt;
}

const Hypothesis& hypothesis(BoundKind kind) { return info(kind).hypothesis; }
BoundStatus bound_status(BoundKind kind) { return info(kind).status; }

SumsetKind subject_sumset(BoundKind kind) {
  return kind == BoundKind::RestrictedDirect ? SumsetKind::Restricted
                                             : SumsetKind::RestrictedSigned;
}

Int lower_bound(BoundKind kind, int h, std::size_t k) {
  if (!hypothesis(kind).admits(h, k)) {
    throw SumsetError(ErrorCode::InapplicableBound,
                      std::string(to_string(kind)) + " does not apply to h = " +
                          std::to_string(h) + ", k = " + std::to_string(k));
  }
  const Int hh = h;
  const auto kk = static_cast<Int>(k);
  switch (kind) {
    case BoundKind::RestrictedDirect: return hh * kk - hh * hh + 1;
    case BoundKind::SignedPositiveGeneral: return 2 * (hh * kk - hh * hh) + hh * (hh + 1) / 2 + 1;
    case BoundKind::SignedNonnegGeneral: return 2 * (hh * kk - hh * hh) + hh * (hh - 1) / 2 + 1;
    case BoundKind::PositiveMidRange: return 2 * hh * kk - hh * hh + 1;
    case BoundKind::NonnegMidRange: return 2 * hh * kk - hh * (hh + 1) + 1;
    case BoundKind::PositiveFullK: return hh * (hh + 1) / 2 + 1;
    case BoundKind::NonnegFullK: return hh * (hh - 1) / 2 + 1;
    case BoundKind::HPlusOneCase: return hh * hh + hh + 1;
  }
  throw SumsetError(ErrorCode::InapplicableBound, "unknown bound kind");
}

std::vector<BoundKind> applicable_bounds(const IntegerSet& set, int h) {
  if (h < 1 || static_cast<std::size_t>(h) > set.size()) {
    throw SumsetError(ErrorCode::InfeasibleH, "applicable_bounds requires 1 <= h <= k");
  }
  const IntegerSet analyzed = wants_abs_reduction(set) ? abs_set(set) : set;
  std::vector<BoundKind> out;
  for (BoundKind kind : kAllBoundKinds) {
    // The restricted bound is about A itself, the signed ones about A_abs.
    const IntegerSet& subject = kind == BoundKind::RestrictedDirect ? set : analyzed;
    if (admits_set(hypothesis(kind), subject, h)) out.push_back(kind);
  }
  return out;
}

const BoundRow* BoundReport::find(BoundKind kind) const noexcept {
  for (const BoundRow& row : rows) {
    if (row.kind == kind) return &row;
  }
  return nullptr;
}

const IntegerSet& BoundReport::subject(BoundKind kind) const noexcept {
  return kind == BoundKind::RestrictedDirect ? set : analyzed;
}

BoundReport check_bounds(const IntegerSet& set, int h) {
  const bool reduce = wants_abs_reduction(set);
  BoundReport report{set, reduce ? abs_set(set) : set, h, reduce, {}};

  const std::vector<BoundKind> kinds = applicable_bounds(set, h);
  std::optional<Int> restricted_size;
  std::optional<Int> signed_size;
  for (BoundKind kind : kinds) {
    Int actual = 0;
    if (subject_sumset(kind) == SumsetKind::Restricted) {
      if (!restricted_size) restricted_size = static_cast<Int>(restricted_sumset(set, h).sums.size());
      actual = *restricted_size;
    } else {
      if (!signed_size) {
        signed_size = static_cast<Int>(restricted_signed_sumset(report.analyzed, h).sums.size());
      }
      actual = *signed_size;
    }
    const Int bound = lower_bound(kind, h, set.size());
    report.rows.push_back({kind, bound, actual, actual >= bound, actual == bound, bound_status(kind)});
  }
  return report;
}

}  // namespace sumset
