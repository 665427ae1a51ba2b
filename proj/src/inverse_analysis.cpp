#include "sumset/inverse_analysis.hpp"

#include <algorithm>
#include <functional>

#include "sumset/error.hpp"

namespace sumset {

std::string_view to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::DilatedInterval: return "DilatedInterval";
    case StructureKind::DilatedIntervalFromOne: return "DilatedIntervalFromOne";
    case StructureKind::DilatedOddAp: return "DilatedOddAp";
    case StructureKind::ExceptionalH4K5: return "ExceptionalH4K5";
    case StructureKind::TriplePlusSum: return "TriplePlusSum";
    case StructureKind::ZeroTriplePlusSum: return "ZeroTriplePlusSum";
    case StructureKind::PlainAp: return "PlainAp";
    case StructureKind::Other: return "Other";
  }
  return "Unknown";
}

std::string to_string(const StructureClass& cls) {
  std::string out(to_string(cls.kind));
  if (cls.d != 0) out += "(" + std::to_string(cls.d) + ")";
  return out;
}

namespace {

/// d * pattern(i) for i in [0, k), compared element-wise with the set.
bool matches_dilated(const IntegerSet& set, Int d, const std::function<Int(Int)>& pattern) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] != d * pattern(static_cast<Int>(i))) return false;
  }
  return true;
}

bool is_plus_sum(Int a, Int b, Int c) { return 0 < a && a < b && c == a + b; }

}  // namespace

std::vector<StructureClass> classify(const IntegerSet& set) {
  std::vector<StructureClass> out;
  const std::size_t k = set.size();

  if (set.min() == 0) {
    const Int d = k == 1 ? 1 : set[1];
    if (matches_dilated(set, d, [](Int i) { return i; })) {
      out.push_back({StructureKind::DilatedInterval, d});
    }
  }
  if (set.min() > 0) {
    const Int d = set.min();
    if (matches_dilated(set, d, [](Int i) { return i + 1; })) {
      out.push_back({StructureKind::DilatedIntervalFromOne, d});
    }
    if (matches_dilated(set, d, [](Int i) { return 2 * i + 1; })) {
      out.push_back({StructureKind::DilatedOddAp, d});
    }
  }
  if (k == 5 && set.min() == 0) {
    static constexpr Int kPattern[] = {0, 1, 2, 4, 6};
    const Int d = set[1];
    if (matches_dilated(set, d, [](Int i) { return kPattern[i]; })) {
      out.push_back({StructureKind::ExceptionalH4K5, d});
    }
  }
  if (k == 3 && is_plus_sum(set[0], set[1], set[2])) {
    out.push_back({StructureKind::TriplePlusSum, 0});
  }
  if (k == 4 && set[0] == 0 && is_plus_sum(set[1], set[2], set[3])) {
    out.push_back({StructureKind::ZeroTriplePlusSum, 0});
  }
  if (const auto ap = is_ap(set)) {
    out.push_back({StructureKind::PlainAp, ap->common_difference});
  }
  if (out.empty()) out.push_back({StructureKind::Other, 0});
  return out;
}

bool InversePrediction::admits(const std::vector<StructureClass>& classes) const {
  return std::any_of(classes.begin(), classes.end(), [&](const StructureClass& cls) {
    return std::find(allowed.begin(), allowed.end(), cls.kind) != allowed.end();
  });
}

std::optional<InversePrediction> find_prediction(BoundKind kind, int h, std::size_t k) {
  if (!hypothesis(kind).admits(h, k)) {
    throw SumsetError(ErrorCode::InapplicableBound,
                      std::string(to_string(kind)) + " does not apply to h = " +
                          std::to_string(h) + ", k = " + std::to_string(k));
  }
  using S = StructureKind;
  std::vector<S> allowed;
  switch (kind) {
    case BoundKind::RestrictedDirect:
      allowed = {S::PlainAp};
      break;
    case BoundKind::PositiveMidRange:
      allowed = {S::DilatedOddAp};
      break;
    case BoundKind::HPlusOneCase:
      // Coincides with NonnegMidRange once k >= 5; (3, 4) has no inverse claim.
      if (k < 5) return std::nullopt;
      [[fallthrough]];
    case BoundKind::NonnegMidRange:
      if (h == 4 && k == 5) {
        allowed = {S::DilatedInterval, S::ExceptionalH4K5};
      } else {
        allowed = {S::DilatedInterval};
      }
      break;
    case BoundKind::PositiveFullK:
      allowed = {h == 3 ? S::TriplePlusSum : S::DilatedIntervalFromOne};
      break;
    case BoundKind::NonnegFullK:
      if (h == 3) return std::nullopt;
      allowed = {h == 4 ? S::ZeroTriplePlusSum : S::DilatedInterval};
      break;
    case BoundKind::SignedPositiveGeneral:
    case BoundKind::SignedNonnegGeneral:
      return std::nullopt;
  }
  return InversePrediction{kind, h, k, std::move(allowed)};
}

InversePrediction predicted_structures(BoundKind kind, int h, std::size_t k) {
  auto prediction = find_prediction(kind, h, k);
  if (!prediction) {
    throw SumsetError(ErrorCode::InapplicableBound,
                      "no inverse characterization is encoded for " +
                          std::string(to_string(kind)) + " at h = " + std::to_string(h) +
                          ", k = " + std::to_string(k));
  }
  return *std::move(prediction);
}

InverseOutcome evaluate_inverse(const BoundReport& report, BoundKind kind) {
  const BoundRow* row = report.find(kind);
  if (row == nullptr) {
    throw SumsetError(ErrorCode::InapplicableBound,
                      std::string(to_string(kind)) + " is not applicable to this set");
  }
  InverseOutcome outcome{row->bound, row->actual, row->is_equality, {}, std::nullopt};
  if (!outcome.equality) return outcome;

  const IntegerSet& subject = report.subject(kind);
  outcome.classes = classify(subject);
  if (const auto prediction = find_prediction(kind, report.h, subject.size())) {
    outcome.prediction_matched = prediction->admits(outcome.classes);
  }
  return outcome;
}

bool verify_inverse_instance(const IntegerSet& set, int h, BoundKind kind) {
  return evaluate_inverse(check_bounds(set, h), kind).holds();
}

}  // namespace sumset
