#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace rcm {

using VertexId = std::uint32_t;

// Growable bitset over vertex ids. Equality and ordering ignore capacity, so
// two sets compare equal iff they hold the same ids.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    iterator() = default;
    iterator(const std::vector<std::uint64_t>* words, std::size_t word, std::uint64_t bits)
        : words_(words), word_(word), bits_(bits) {
      settle();
    }

    VertexId operator*() const {
      return static_cast<VertexId>(word_ * 64 + static_cast<std::size_t>(std::countr_zero(bits_)));
    }
    iterator& operator++() {
      bits_ &= bits_ - 1;
      settle();
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& o) const { return word_ == o.word_ && bits_ == o.bits_; }

   private:
    void settle() {
      while (bits_ == 0 && words_ != nullptr && word_ + 1 < words_->size()) {
        ++word_;
        bits_ = (*words_)[word_];
      }
      if (bits_ == 0 && words_ != nullptr) word_ = words_->size();
    }

    const std::vector<std::uint64_t>* words_ = nullptr;
    std::size_t word_ = 0;
    std::uint64_t bits_ = 0;
  };

  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids) {
    for (VertexId v : ids) insert(v);
  }
  template <class Range>
  static VertexSet of(const Range& ids) {
    VertexSet s;
    for (auto v : ids) s.insert(static_cast<VertexId>(v));
    return s;
  }

  void insert(VertexId v) {
    std::size_t w = v / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (v % 64);
  }
  void erase(VertexId v) {
    std::size_t w = v / 64;
    if (w < words_.size()) words_[w] &= ~(std::uint64_t{1} << (v % 64));
  }
  bool contains(VertexId v) const {
    std::size_t w = v / 64;
    return w < words_.size() && ((words_[w] >> (v % 64)) & 1U) != 0;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  void clear() { words_.clear(); }

  // Smallest member; undefined on an empty set.
  VertexId front() const { return *begin(); }

  iterator begin() const {
    if (words_.empty()) return end();
    return iterator(&words_, 0, words_[0]);
  }
  iterator end() const { return iterator(&words_, words_.size(), 0); }

  std::vector<VertexId> to_vector() const { return {begin(), end()}; }

  bool intersects(const VertexSet& o) const {
    std::size_t n = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
      if ((words_[i] & ~other) != 0) return false;
    }
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    std::size_t n = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    std::size_t n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (a.word(i) != b.word(i)) return false;
    return true;
  }
  // Lexicographic on the ascending member lists.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
      if (*ia != *ib) return *ia <=> *ib;
    if (ia == a.end() && ib == b.end()) return std::strong_ordering::equal;
    return ia == a.end() ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  std::uint64_t word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }

  std::vector<std::uint64_t> words_;
};

}  // namespace rcm
