#pragma once

// Brute-force reference implementations for tests. Nothing here touches the
// dynamic programs in the library.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Int = std::int64_t;

/// Every coefficient vector with λ_i in [lo, hi] and Σ|λ_i| = h.
inline std::set<Int> coefficient_sums(const std::vector<Int>& a, int h, int lo, int hi) {
  std::set<Int> out;
  std::function<void(std::size_t, int, Int)> rec = [&](std::size_t i, int left, Int sum) {
    if (i == a.size()) {
      if (left == 0) out.insert(sum);
      return;
    }
    for (int lambda = lo; lambda <= hi; ++lambda) {
      const int weight = lambda < 0 ? -lambda : lambda;
      if (weight > left) continue;
      rec(i + 1, left - weight, sum + lambda * a[i]);
    }
  };
  rec(0, h, 0);
  return out;
}

inline std::set<Int> hfold(const std::vector<Int>& a, int h) { return coefficient_sums(a, h, 0, h); }
inline std::set<Int> restricted(const std::vector<Int>& a, int h) { return coefficient_sums(a, h, 0, 1); }
inline std::set<Int> signed_sums(const std::vector<Int>& a, int h) { return coefficient_sums(a, h, -h, h); }
inline std::set<Int> restricted_signed(const std::vector<Int>& a, int h) {
  return coefficient_sums(a, h, -1, 1);
}

inline std::set<Int> subset_sums(const std::vector<Int>& a) {
  std::set<Int> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.size()); ++mask) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if ((mask >> i) & 1U) s += a[i];
    }
    out.insert(s);
  }
  return out;
}

inline Int binomial(Int n, Int r) {
  if (r < 0 || r > n) return 0;
  Int out = 1;
  for (Int i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
  return out;
}

inline int mobius(Int n) {
  int sign = 1;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

/// Number of sets {0} ∪ B, B ⊆ [1, M], |B| = k − 1, gcd(B) = 1.
inline Int canonical_zero_count(Int k, Int max_element) {
  Int total = 0;
  for (Int d = 1; d <= max_element; ++d) total += mobius(d) * binomial(max_element / d, k - 1);
  return total;
}

/// Number of sets B ⊆ [1, M], |B| = k, gcd(B) = 1.
inline Int canonical_positive_count(Int k, Int max_element) {
  Int total = 0;
  for (Int d = 1; d <= max_element; ++d) total += mobius(d) * binomial(max_element / d, k);
  return total;
}

}  // namespace oracle
