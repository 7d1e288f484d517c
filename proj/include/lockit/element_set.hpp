#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace lockit {

using Element = std::uint32_t;

// Fixed-universe bitset over element ids [0, universe).
class ElementSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    const_iterator() = default;
    const_iterator(const ElementSet* set, std::size_t pos) : set_(set), pos_(pos) { advance_to_set(); }

    Element operator*() const { return static_cast<Element>(pos_); }
    const_iterator& operator++() {
      ++pos_;
      advance_to_set();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    void advance_to_set() {
      const std::size_t n = set_->universe_;
      while (pos_ < n) {
        const std::uint64_t word = set_->words_[pos_ >> 6] >> (pos_ & 63);
        if (word != 0) {
          pos_ += static_cast<std::size_t>(std::countr_zero(word));
          return;
        }
        pos_ = (pos_ | 63) + 1;
      }
      pos_ = n;
    }

    const ElementSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<Element> members) : ElementSet(universe) {
    for (Element e : members) insert(e);
  }
  template <class Range>
  static ElementSet from_range(std::size_t universe, const Range& members) {
    ElementSet s(universe);
    for (auto e : members) s.insert(static_cast<Element>(e));
    return s;
  }
  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Element>(i));
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Element e) const { return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1U) != 0; }
  void insert(Element e) { words_[e >> 6] |= (std::uint64_t{1} << (e & 63)); }
  void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  // Smallest member; universe() if empty.
  Element first() const { return *begin(); }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  bool operator==(const ElementSet& o) const = default;

  // Canonical order: by cardinality, then by sorted member list.
  std::strong_ordering operator<=>(const ElementSet& o) const {
    if (auto c = count() <=> o.count(); c != 0) return c;
    auto a = begin();
    auto b = o.begin();
    for (; a != end() && b != o.end(); ++a, ++b)
      if (*a != *b) return *a <=> *b;
    return std::strong_ordering::equal;
  }

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const { return const_iterator(this, universe_); }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL ^ universe_;
    for (auto w : words_) h = (h ^ static_cast<std::size_t>(w)) * 1099511628211ULL + (h >> 29);
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace lockit

template <>
struct std::hash<lockit::ElementSet> {
  std::size_t operator()(const lockit::ElementSet& s) const { return s.hash(); }
};
