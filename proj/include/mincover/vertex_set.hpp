#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace mincover {

using Vertex = std::uint32_t;

/// Finite set of vertex ids stored as a bitset.
///
/// Trailing zero words are trimmed after every mutation, so two sets are
/// equal iff their word arrays are equal. Up to 256 vertices fit inline.
class VertexSet {
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;
  using Words = boost::container::small_vector<Word, 4>;

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;

    Vertex operator*() const { return static_cast<Vertex>(pos_); }
    const_iterator& operator++() {
      pos_ = owner_->next_from(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    friend class VertexSet;
    const_iterator(const VertexSet* owner, std::size_t pos) : owner_(owner), pos_(pos) {}

    const VertexSet* owner_ = nullptr;
    std::size_t pos_ = 0;
  };

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }
  template <std::input_iterator It>
  VertexSet(It first, It last) {
    for (; first != last; ++first) insert(static_cast<Vertex>(*first));
  }

  void insert(Vertex v) {
    const std::size_t w = v / kBits;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= Word{1} << (v % kBits);
  }

  void erase(Vertex v) {
    const std::size_t w = v / kBits;
    if (w >= words_.size()) return;
    words_[w] &= ~(Word{1} << (v % kBits));
    trim();
  }

  bool contains(Vertex v) const {
    const std::size_t w = v / kBits;
    return w < words_.size() && ((words_[w] >> (v % kBits)) & 1U);
  }

  bool empty() const { return words_.empty(); }

  std::size_t size() const {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  void clear() { words_.clear(); }

  /// Smallest member; undefined on an empty set.
  Vertex min() const { return static_cast<Vertex>(next_from(0)); }

  /// Largest member; undefined on an empty set.
  Vertex max() const {
    const Word top = words_.back();
    return static_cast<Vertex>((words_.size() - 1) * kBits + (kBits - 1) -
                               static_cast<std::size_t>(std::countl_zero(top)));
  }

  VertexSet& operator|=(const VertexSet& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    if (words_.size() > o.words_.size()) words_.resize(o.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    trim();
    return *this;
  }

  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    const std::size_t n = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] &= ~o.words_[i];
    trim();
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool is_subset_of(const VertexSet& o) const {
    if (words_.size() > o.words_.size()) return false;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  bool intersects(const VertexSet& o) const {
    const std::size_t n = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return std::equal(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end());
  }

  /// Orders sets by their ascending member lists, lexicographically.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
      if (*ia != *ib) return *ia <=> *ib;
    }
    if (ia == a.end() && ib == b.end()) return std::strong_ordering::equal;
    return ia == a.end() ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  const_iterator begin() const { return {this, next_from(0)}; }
  const_iterator end() const { return {this, end_pos()}; }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (Word w : words_) h = (h ^ w) * 1099511628211ULL;
    return h;
  }

 private:
  std::size_t end_pos() const { return words_.size() * kBits; }

  std::size_t next_from(std::size_t pos) const {
    std::size_t w = pos / kBits;
    if (w >= words_.size()) return end_pos();
    Word cur = words_[w] & (~Word{0} << (pos % kBits));
    while (true) {
      if (cur != 0) return w * kBits + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w == words_.size()) return end_pos();
      cur = words_[w];
    }
  }

  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  Words words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace mincover
