#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sumset {

/// Fixed-width bitset over an offset integer range. Bit i stands for the sum
/// i + offset, where the offset is owned by the caller.
class SumBitset {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::int64_t kMaxBits = std::int64_t{1} << 30;

  SumBitset() = default;
  explicit SumBitset(std::size_t bits) : bits_(bits), words_((bits + kWordBits - 1) / kWordBits) {}

  std::size_t bits() const noexcept { return bits_; }

  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void reset() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

  bool any() const noexcept {
    for (Word w : words_) {
      if (w) return true;
    }
    return false;
  }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  SumBitset& operator|=(const SumBitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  /// this |= src shifted by `shift` positions (positive moves toward higher
  /// sums). Bits pushed out of range are dropped. `src` must not alias *this.
  void or_shifted(const SumBitset& src, std::int64_t shift) noexcept {
    const std::size_t n = words_.size();
    if (shift >= 0) {
      const auto amount = static_cast<std::size_t>(shift);
      const std::size_t q = amount / kWordBits;
      const std::size_t r = amount % kWordBits;
      if (q >= n) return;
      if (r == 0) {
        for (std::size_t i = q; i < n; ++i) words_[i] |= src.words_[i - q];
      } else {
        words_[q] |= src.words_[0] << r;
        for (std::size_t i = q + 1; i < n; ++i) {
          words_[i] |= (src.words_[i - q] << r) | (src.words_[i - q - 1] >> (kWordBits - r));
        }
      }
      trim();
    } else {
      const auto amount = static_cast<std::size_t>(-shift);
      const std::size_t q = amount / kWordBits;
      const std::size_t r = amount % kWordBits;
      if (q >= n) return;
      const std::size_t last = n - q;
      if (r == 0) {
        for (std::size_t i = 0; i < last; ++i) words_[i] |= src.words_[i + q];
      } else {
        for (std::size_t i = 0; i + 1 < last; ++i) {
          words_[i] |= (src.words_[i + q] >> r) | (src.words_[i + q + 1] << (kWordBits - r));
        }
        words_[last - 1] |= src.words_[n - 1] >> r;
      }
    }
  }

  /// Ascending list of represented sums.
  std::vector<std::int64_t> collect(std::int64_t offset) const {
    std::vector<std::int64_t> out;
    out.reserve(count());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word word = words_[w];
      while (word) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(word));
        out.push_back(static_cast<std::int64_t>(w * kWordBits + bit) + offset);
        word &= word - 1;
      }
    }
    return out;
  }

private:
  void trim() noexcept {
    const std::size_t tail = bits_ % kWordBits;
    if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
  }

  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

}  // namespace sumset
