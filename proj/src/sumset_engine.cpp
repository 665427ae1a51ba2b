#include "sumset/sumset_engine.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "sumset/error.hpp"
#include "sumset/sum_bitset.hpp"

namespace sumset {

std::string_view to_string(SumsetKind kind) {
  switch (kind) {
    case SumsetKind::Ordinary: return "ordinary";
    case SumsetKind::Restricted: return "restricted";
    case SumsetKind::Signed: return "signed";
    case SumsetKind::RestrictedSigned: return "restricted-signed";
  }
  return "unknown";
}

std::optional<SumsetKind> parse_sumset_kind(std::string_view name) {
  std::string key;
  for (char c : name) {
    if (c == '-' || c == '_') continue;
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (key == "ordinary" || key == "hfold") return SumsetKind::Ordinary;
  if (key == "restricted") return SumsetKind::Restricted;
  if (key == "signed") return SumsetKind::Signed;
  if (key == "restrictedsigned") return SumsetKind::RestrictedSigned;
  return std::nullopt;
}

namespace {

constexpr Int kMaxLayerBits = Int{1} << 32;

void require_positive_h(int h) {
  if (h < 1) throw SumsetError(ErrorCode::InfeasibleH, "h must be at least 1");
}

void require_h_at_most_k(const IntegerSet& set, int h) {
  require_positive_h(h);
  if (static_cast<std::size_t>(h) > set.size()) {
    throw SumsetError(ErrorCode::InfeasibleH, "h = " + std::to_string(h) +
                                                  " exceeds the set cardinality k = " +
                                                  std::to_string(set.size()));
  }
}

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out) || out > kSumLimit || out < -kSumLimit) {
    throw SumsetError(ErrorCode::Overflow, "sum magnitude exceeds the supported range");
  }
  return out;
}

/// Allocates h + 1 layers of `width` bits after checking the memory ceiling.
std::vector<SumBitset> make_layers(int h, Int width, int copies = 1) {
  if (width > SumBitset::kMaxBits ||
      static_cast<Int>(h + 1) * copies > kMaxLayerBits / width) {
    throw SumsetError(ErrorCode::RangeTooLarge, "sumset window of " + std::to_string(width) +
                                                    " bits is too wide for the dynamic program");
  }
  return std::vector<SumBitset>(static_cast<std::size_t>(h + 1),
                                SumBitset(static_cast<std::size_t>(width)));
}

std::vector<Int> shifted_by_min(const IntegerSet& set) {
  std::vector<Int> out;
  out.reserve(set.size());
  for (Int a : set) out.push_back(a - set.min());
  return out;
}

Int signed_window(Int reach) {
  if (reach >= SumBitset::kMaxBits) {
    throw SumsetError(ErrorCode::RangeTooLarge, "sumset window is too wide for the dynamic program");
  }
  return 2 * reach + 1;
}

Int magnitude_sum_of_largest(const IntegerSet& set, int h) {
  std::vector<Int> mags;
  mags.reserve(set.size());
  for (Int a : set) mags.push_back(a < 0 ? -a : a);
  std::sort(mags.begin(), mags.end(), std::greater<>());
  Int s = 0;
  for (int i = 0; i < h; ++i) s += mags[static_cast<std::size_t>(i)];
  return s;
}

}  // namespace

SumsetResult hfold_sumset(const IntegerSet& set, int h) {
  require_positive_h(h);
  // hA = h*min + h(A - min): every term is nonnegative after the shift.
  const Int base = checked_mul(h, set.min());
  checked_mul(h, set.max());
  const std::vector<Int> shifted = shifted_by_min(set);
  const Int width = checked_mul(h, shifted.back()) + 1;

  auto layers = make_layers(h, width);
  layers[0].set(0);
  for (Int b : shifted) {
    for (int j = 1; j <= h; ++j) layers[j].or_shifted(layers[j - 1], b);
  }
  return {IntegerSet(layers[h].collect(base)), SumsetKind::Ordinary, h, set.size()};
}

SumsetResult restricted_sumset(const IntegerSet& set, int h) {
  require_h_at_most_k(set, h);
  const Int base = checked_mul(h, set.min());
  const std::vector<Int> shifted = shifted_by_min(set);
  const Int width = checked_mul(h, shifted.back()) + 1;
  const int k = static_cast<int>(set.size());

  auto layers = make_layers(h, width);
  layers[0].set(0);
  for (int i = 0; i < k; ++i) {
    const int hi = std::min(i + 1, h);
    const int lo = std::max(1, h - (k - i - 1));
    for (int j = hi; j >= lo; --j) layers[j].or_shifted(layers[j - 1], shifted[i]);
  }
  return {IntegerSet(layers[h].collect(base)), SumsetKind::Restricted, h, set.size()};
}

SumsetResult signed_sumset(const IntegerSet& set, int h) {
  require_positive_h(h);
  Int largest = 0;
  for (Int a : set) largest = std::max(largest, a < 0 ? -a : a);
  const Int reach = checked_mul(h, largest);
  const Int width = signed_window(reach);

  auto layers = make_layers(h, width, 3);
  auto up = layers;
  auto down = layers;
  layers[0].set(static_cast<std::size_t>(reach));

  // Per element, λ = ±m for m ≥ 0: up[j] collects old[j - m] shifted by +m*a,
  // down[j] by −m*a. Mixing signs on one element is impossible by construction.
  for (Int a : set) {
    up[0] = layers[0];
    down[0] = layers[0];
    for (int j = 1; j <= h; ++j) {
      up[j] = layers[j];
      up[j].or_shifted(up[j - 1], a);
      down[j] = layers[j];
      down[j].or_shifted(down[j - 1], -a);
    }
    for (int j = 1; j <= h; ++j) {
      layers[j] = up[j];
      layers[j] |= down[j];
    }
  }
  return {IntegerSet(layers[h].collect(-reach)), SumsetKind::Signed, h, set.size()};
}

SumsetResult restricted_signed_sumset(const IntegerSet& set, int h) {
  require_h_at_most_k(set, h);
  const Int reach = magnitude_sum_of_largest(set, h);
  const Int width = signed_window(reach);
  const int k = static_cast<int>(set.size());

  auto layers = make_layers(h, width);
  layers[0].set(static_cast<std::size_t>(reach));
  for (int i = 0; i < k; ++i) {
    const Int a = set[static_cast<std::size_t>(i)];
    const int hi = std::min(i + 1, h);
    const int lo = std::max(1, h - (k - i - 1));
    for (int j = hi; j >= lo; --j) {
      layers[j].or_shifted(layers[j - 1], a);
      if (a != 0) layers[j].or_shifted(layers[j - 1], -a);
    }
  }
  return {IntegerSet(layers[h].collect(-reach)), SumsetKind::RestrictedSigned, h, set.size()};
}

std::uint64_t oracle_budget_from_env() {
  const char* raw = std::getenv("SUMSET_ORACLE_BUDGET");
  if (raw == nullptr) return kDefaultOracleBudget;
  std::uint64_t value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return kDefaultOracleBudget;
  return value;
}

SumsetResult restricted_signed_sumset_oracle(const IntegerSet& set, int h, std::uint64_t budget) {
  require_h_at_most_k(set, h);
  const int k = static_cast<int>(set.size());

  // C(k, h) * 2^h. C(k, i) grows monotonically for i <= min(h, k - h).
  const int m = std::min(h, k - h);
  unsigned __int128 work = 1;
  bool over = h >= 63;
  for (int i = 0; i < m && !over; ++i) {
    work = work * static_cast<unsigned>(k - i) / static_cast<unsigned>(i + 1);
    over = work > budget;
  }
  if (!over) over = (work << h) > budget;
  if (over) {
    throw SumsetError(ErrorCode::OracleTooLarge,
                      "C(k,h) * 2^h exceeds the oracle budget of " + std::to_string(budget));
  }

  std::vector<Int> sums;
  std::vector<int> support(static_cast<std::size_t>(h));
  for (int i = 0; i < h; ++i) support[static_cast<std::size_t>(i)] = i;
  while (true) {
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << h); ++signs) {
      Int total = 0;
      for (int i = 0; i < h; ++i) {
        const Int a = set[static_cast<std::size_t>(support[static_cast<std::size_t>(i)])];
        total += ((signs >> i) & 1U) ? -a : a;
      }
      sums.push_back(total);
    }
    // Next h-combination of [0, k) in lexicographic order.
    int pos = h - 1;
    while (pos >= 0 && support[static_cast<std::size_t>(pos)] == k - h + pos) --pos;
    if (pos < 0) break;
    ++support[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < h; ++i) {
      support[static_cast<std::size_t>(i)] = support[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return {IntegerSet(std::move(sums)), SumsetKind::RestrictedSigned, h, set.size()};
}

SumsetResult compute_sumset(SumsetKind kind, const IntegerSet& set, int h) {
  switch (kind) {
    case SumsetKind::Ordinary: return hfold_sumset(set, h);
    case SumsetKind::Restricted: return restricted_sumset(set, h);
    case SumsetKind::Signed: return signed_sumset(set, h);
    case SumsetKind::RestrictedSigned: return restricted_signed_sumset(set, h);
  }
  throw SumsetError(ErrorCode::InvalidConfig, "unknown sumset kind");
}

}  // namespace sumset
