#include "sumset/integer_set.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <limits>
#include <numeric>

#include "sumset/error.hpp"
#include "sumset/sum_bitset.hpp"

namespace sumset {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySet: return "empty-set";
    case ErrorCode::NotStrictlyIncreasing: return "not-strictly-increasing";
    case ErrorCode::DuplicateElement: return "duplicate-element";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::InvalidInterval: return "invalid-interval";
    case ErrorCode::InvalidDilation: return "invalid-dilation";
    case ErrorCode::ElementNotFound: return "element-not-found";
    case ErrorCode::WouldBeEmpty: return "would-be-empty";
    case ErrorCode::NoCanonicalForm: return "no-canonical-form";
    case ErrorCode::InfeasibleH: return "infeasible-h";
    case ErrorCode::OracleTooLarge: return "oracle-too-large";
    case ErrorCode::RangeTooLarge: return "range-too-large";
    case ErrorCode::InapplicableBound: return "inapplicable-bound";
    case ErrorCode::InvalidConfig: return "invalid-config";
    case ErrorCode::Checkpoint: return "checkpoint-error";
  }
  return "unknown";
}

namespace {

Int magnitude(Int v) {
  if (v == std::numeric_limits<Int>::min()) {
    throw SumsetError(ErrorCode::Overflow, "element magnitude exceeds the integer range");
  }
  return v < 0 ? -v : v;
}

void check_sum_range(const std::vector<Int>& elements) {
  Int largest = 0;
  for (Int v : elements) largest = std::max(largest, magnitude(v));
  const auto k = static_cast<Int>(elements.size());
  if (largest > kSumLimit / k) {
    throw SumsetError(ErrorCode::Overflow,
                      "worst-case sum magnitude k * max|a| exceeds the supported range");
  }
}

}  // namespace

IntegerSet::IntegerSet(std::vector<Int> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw SumsetError(ErrorCode::EmptySet, "integer set must be nonempty");
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    if (elements_[i - 1] >= elements_[i]) {
      throw SumsetError(ErrorCode::NotStrictlyIncreasing,
                        "integer set elements must be strictly increasing");
    }
  }
  check_sum_range(elements_);
}

IntegerSet::IntegerSet(std::initializer_list<Int> elements)
    : IntegerSet(std::vector<Int>(elements)) {}

IntegerSet IntegerSet::from_unsorted(std::vector<Int> elements) {
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw SumsetError(ErrorCode::DuplicateElement, "integer set contains a duplicate element");
  }
  return IntegerSet(std::move(elements));
}

bool IntegerSet::contains(Int value) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

IntegerSet interval(Int a, Int b) {
  if (a > b) throw SumsetError(ErrorCode::InvalidInterval, "interval requires a <= b");
  if (b - a >= (Int{1} << 32)) {
    throw SumsetError(ErrorCode::RangeTooLarge, "interval is too long to materialize");
  }
  std::vector<Int> out(static_cast<std::size_t>(b - a + 1));
  std::iota(out.begin(), out.end(), a);
  return IntegerSet(std::move(out));
}

IntegerSet dilate(const IntegerSet& set, Int c) {
  if (c == 0) throw SumsetError(ErrorCode::InvalidDilation, "dilation factor must be nonzero");
  std::vector<Int> out;
  out.reserve(set.size());
  for (Int a : set) {
    Int product = 0;
    if (__builtin_mul_overflow(a, c, &product)) {
      throw SumsetError(ErrorCode::Overflow, "dilation overflows the integer range");
    }
    out.push_back(product);
  }
  if (c < 0) std::reverse(out.begin(), out.end());
  return IntegerSet(std::move(out));
}

IntegerSet abs_set(const IntegerSet& set) {
  std::vector<Int> out;
  out.reserve(set.size());
  for (Int a : set) out.push_back(magnitude(a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return IntegerSet(std::move(out));
}

IntegerSet remove(const IntegerSet& set, Int value) {
  if (!set.contains(value)) {
    throw SumsetError(ErrorCode::ElementNotFound,
                      "element " + std::to_string(value) + " is not in the set");
  }
  if (set.size() == 1) {
    throw SumsetError(ErrorCode::WouldBeEmpty, "removing the only element leaves an empty set");
  }
  std::vector<Int> out;
  out.reserve(set.size() - 1);
  for (Int a : set) {
    if (a != value) out.push_back(a);
  }
  return IntegerSet(std::move(out));
}

std::optional<ApWitness> is_ap(const IntegerSet& set) {
  if (set.size() == 1) return ApWitness{set.min(), 1, 1};
  const Int d = set[1] - set[0];
  for (std::size_t i = 2; i < set.size(); ++i) {
    if (set[i] - set[i - 1] != d) return std::nullopt;
  }
  return ApWitness{set.min(), d, set.size()};
}

IntegerSet subset_sums(const IntegerSet& set) {
  Int negative = 0;
  Int positive = 0;
  for (Int a : set) (a < 0 ? negative : positive) += a;

  const Int width = positive - negative + 1;
  if (width <= SumBitset::kMaxBits) {
    SumBitset reach(static_cast<std::size_t>(width));
    reach.set(static_cast<std::size_t>(-negative));
    for (Int a : set) {
      if (a == 0) continue;
      SumBitset shifted = reach;
      reach.or_shifted(shifted, a);
    }
    return IntegerSet(reach.collect(negative));
  }

  // Sparse fallback for wide ranges: merge S with S + a per element.
  std::vector<Int> sums{0};
  std::vector<Int> moved;
  std::vector<Int> merged;
  for (Int a : set) {
    moved.resize(sums.size());
    std::transform(sums.begin(), sums.end(), moved.begin(), [a](Int s) { return s + a; });
    merged.clear();
    std::set_union(sums.begin(), sums.end(), moved.begin(), moved.end(),
                   std::back_inserter(merged));
    sums.swap(merged);
  }
  return IntegerSet(std::move(sums));
}

Int element_gcd(const IntegerSet& set) {
  Int g = 0;
  for (Int a : set) g = std::gcd(g, a);
  return g;
}

CanonicalForm canonical_form(const IntegerSet& set) {
  const Int g = element_gcd(set);
  if (g == 0) {
    throw SumsetError(ErrorCode::NoCanonicalForm, "the all-zero set has no canonical form");
  }
  std::vector<Int> reduced;
  reduced.reserve(set.size());
  for (Int a : set) reduced.push_back(a / g);
  return {g, IntegerSet(std::move(reduced))};
}

bool is_abs_disjoint(const IntegerSet& set) {
  for (Int a : set) {
    if (a > 0 && set.contains(-a)) return false;
  }
  return true;
}

IntegerSet translate(const IntegerSet& set, Int offset) {
  std::vector<Int> out;
  out.reserve(set.size());
  for (Int a : set) {
    Int moved = 0;
    if (__builtin_add_overflow(a, offset, &moved)) {
      throw SumsetError(ErrorCode::Overflow, "translation overflows the integer range");
    }
    out.push_back(moved);
  }
  return IntegerSet(std::move(out));
}

IntegerSet parse_set(std::string_view literal) {
  std::vector<Int> values;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (true) {
    const std::size_t comma = literal.find(',', pos);
    std::string_view token =
        literal.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && is_space(token.front())) token.remove_prefix(1);
    while (!token.empty() && is_space(token.back())) token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    if (token.empty()) {
      throw SumsetError(ErrorCode::Parse, "empty element in set literal '" + std::string(literal) + "'");
    }
    Int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw SumsetError(ErrorCode::Overflow, "element '" + std::string(token) + "' is out of range");
    }
    if (ec != std::errc{} || end != token.data() + token.size()) {
      throw SumsetError(ErrorCode::Parse, "invalid integer '" + std::string(token) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return IntegerSet::from_unsorted(std::move(values));
}

std::string format_set(const IntegerSet& set) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(set[i]);
  }
  return out;
}

}  // namespace sumset
