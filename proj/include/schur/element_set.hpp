#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace schur {

/// Subset of the element indices [0, universe) of some group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<std::uint32_t> members) : ElementSet(universe) {
    for (auto m : members) insert(m);
  }
  template <typename Range>
  static ElementSet from(std::size_t universe, const Range& members) {
    ElementSet s(universe);
    for (auto m : members) s.insert(static_cast<std::uint32_t>(m));
    return s;
  }
  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<std::uint32_t>(i));
    return s;
  }

  std::size_t universe() const { return universe_; }

  void insert(std::uint32_t g) { words_[g >> 6] |= std::uint64_t{1} << (g & 63); }
  void erase(std::uint32_t g) { words_[g >> 6] &= ~(std::uint64_t{1} << (g & 63)); }
  bool contains(std::uint32_t g) const { return g < universe_ && ((words_[g >> 6] >> (g & 63)) & 1U); }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or universe() when empty.
  std::uint32_t min() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<std::uint32_t>(i * 64 + std::countr_zero(words_[i]));
    return static_cast<std::uint32_t>(universe_);
  }

  std::vector<std::uint32_t> elements() const {
    std::vector<std::uint32_t> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w) {
        out.push_back(static_cast<std::uint32_t>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  bool operator==(const ElementSet& o) const { return universe_ == o.universe_ && words_ == o.words_; }

  /// Lexicographic on the ascending member lists.
  bool operator<(const ElementSet& o) const { return elements() < o.elements(); }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace schur
