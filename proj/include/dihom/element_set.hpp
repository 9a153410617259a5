#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace dihom {

/// Dense bitset over element indices [0, size).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static ElementSet full(std::size_t size) {
    ElementSet s(size);
    for (std::size_t i = 0; i < size; ++i) s.insert(i);
    return s;
  }

  static ElementSet from_mask(std::size_t size, std::uint64_t mask) {
    ElementSet s(size);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::size_t size() const noexcept { return size_; }

  bool contains(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
  void insert(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void erase(std::size_t i) noexcept { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool intersects(const ElementSet& o) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }
  bool is_subset_of(const ElementSet& o) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Low 64 bits; exact when size() <= 64.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

 private:
  void trim() noexcept {
    if (size_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace dihom
