#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sumset {

using Int = std::int64_t;

/// Largest magnitude a sum over a set may reach. Construction rejects sets whose
/// worst case k * max|a| would exceed it.
inline constexpr Int kSumLimit = Int{1} << 62;

/// Nonempty, strictly increasing, finite set of integers.
class IntegerSet {
public:
  /// Requires strictly increasing input.
  explicit IntegerSet(std::vector<Int> elements);
  IntegerSet(std::initializer_list<Int> elements);

  /// Sorts; duplicates are an error.
  static IntegerSet from_unsorted(std::vector<Int> elements);

  std::span<const Int> elements() const noexcept { return elements_; }
  const std::vector<Int>& values() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  Int min() const noexcept { return elements_.front(); }
  Int max() const noexcept { return elements_.back(); }
  Int operator[](std::size_t i) const noexcept { return elements_[i]; }
  bool contains(Int value) const noexcept;

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;
  friend auto operator<=>(const IntegerSet& a, const IntegerSet& b) {
    return a.elements_ <=> b.elements_;
  }

private:
  std::vector<Int> elements_;
};

struct ApWitness {
  Int first_term = 0;
  Int common_difference = 1;
  std::size_t length = 0;

  friend bool operator==(const ApWitness&, const ApWitness&) = default;
};

IntegerSet interval(Int a, Int b);
IntegerSet dilate(const IntegerSet& set, Int c);
inline IntegerSet negate(const IntegerSet& set) { return dilate(set, -1); }
IntegerSet abs_set(const IntegerSet& set);
IntegerSet remove(const IntegerSet& set, Int value);

/// k = 1 yields difference 1; k = 2 yields the single gap.
std::optional<ApWitness> is_ap(const IntegerSet& set);

/// All 2^k subset sums (the empty subset contributes 0).
IntegerSet subset_sums(const IntegerSet& set);

struct CanonicalForm {
  Int divisor = 1;
  IntegerSet reduced;
};

/// Factors out the gcd of the elements (zeros ignored). Translation is never
/// applied: the signed sumsets are not translation invariant.
CanonicalForm canonical_form(const IntegerSet& set);

/// gcd of all elements; 0 for the all-zero set.
Int element_gcd(const IntegerSet& set);

/// True iff A ∩ (−A) ⊆ {0}.
bool is_abs_disjoint(const IntegerSet& set);

/// Translation by a constant, used for the min + 2∗Σ(A) identity.
IntegerSet translate(const IntegerSet& set, Int offset);

/// Parses `0, 1,2,4 ,6`. Sorts; rejects duplicates and empty input.
IntegerSet parse_set(std::string_view literal);

/// Ascending, comma-separated, no spaces.
std::string format_set(const IntegerSet& set);

}  // namespace sumset
