#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace dihg {

// Fixed-universe dynamic bitset used by the exact search engines.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(int size) : size_(size), words_(static_cast<std::size_t>((size + 63) / 64), 0) {}

  int size() const { return size_; }
  void set(int i) { words_[static_cast<std::size_t>(i >> 6)] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // Lowest set bit, or -1.
  int first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
    return -1;
  }
  // Lowest set bit >= i, or -1.
  int next(int i) const {
    if (i >= size_) return -1;
    std::size_t k = static_cast<std::size_t>(i >> 6);
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w) return static_cast<int>(k * 64) + std::countr_zero(w);
      if (++k >= words_.size()) return -1;
      w = words_[k];
    }
  }

  BitSet& operator|=(const BitSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  BitSet& operator&=(const BitSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  BitSet& subtract(const BitSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  bool intersects(const BitSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }
  bool is_subset_of(const BitSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  // |*this & ~o|
  int count_outside(const BitSet& o) const {
    int c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & ~o.words_[k]);
    return c;
  }

  void fill() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  bool operator==(const BitSet& o) const { return size_ == o.size_ && words_ == o.words_; }
  bool operator<(const BitSet& o) const { return words_ < o.words_; }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void trim() {
    int extra = static_cast<int>(words_.size() * 64) - size_;
    if (extra > 0 && !words_.empty()) words_.back() &= ~std::uint64_t{0} >> extra;
  }

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace dihg
