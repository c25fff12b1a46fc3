#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rooklab::bits {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

inline bool test(std::span<const Word> row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1U;
}
inline void set(std::span<Word> row, std::size_t i) { row[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void reset(std::span<Word> row, std::size_t i) {
  row[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}
inline void flip(std::span<Word> row, std::size_t i) { row[i / kWordBits] ^= Word{1} << (i % kWordBits); }

inline std::size_t count(std::span<const Word> row) {
  std::size_t c = 0;
  for (Word w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

inline bool any(std::span<const Word> row) {
  for (Word w : row)
    if (w) return true;
  return false;
}

/// Calls f(index) for every set bit in ascending order.
template <typename F>
void for_each(std::span<const Word> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    Word word = row[w];
    while (word) {
      const int b = std::countr_zero(word);
      f(w * kWordBits + static_cast<std::size_t>(b));
      word &= word - 1;
    }
  }
}

inline std::vector<std::size_t> members(std::span<const Word> row) {
  std::vector<std::size_t> out;
  for_each(row, [&](std::size_t i) { out.push_back(i); });
  return out;
}

/// A fixed-size dynamic bitset used for vertex sets.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t n) : size_(n), words_(words_for(n), 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return bits::test(words_, i); }
  void set(std::size_t i) { bits::set(words_, i); }
  void reset(std::size_t i) { bits::reset(words_, i); }
  std::size_t count() const { return bits::count(words_); }
  bool any() const { return bits::any(words_); }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  BitSet& operator&=(std::span<const Word> other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other[i];
    return *this;
  }
  BitSet& operator&=(const BitSet& other) { return *this &= other.words(); }

  std::vector<int> members() const {
    std::vector<int> out;
    for_each(words_, [&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

  friend bool operator==(const BitSet&, const BitSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace rooklab::bits
