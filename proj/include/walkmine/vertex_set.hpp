#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace walkmine {

using VertexId = std::uint32_t;

/// Dense bit-indexed subset of a graph's vertex-id universe [0, universe).
///
/// Binary set operations require both operands to share the same universe.
/// Ordering is lexicographic over the ascending member-id sequences, which is
/// the canonical order used for deduplication and deterministic reporting.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr VertexId npos = static_cast<VertexId>(-1);

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    const_iterator() = default;
    const_iterator(const VertexSet* set, VertexId pos) : set_(set), pos_(pos) {}

    VertexId operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = set_->next(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.pos_ == b.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    VertexId pos_ = npos;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexId> ids) : VertexSet(universe) {
    for (auto v : ids) insert(v);
  }
  VertexSet(std::size_t universe, std::span<const VertexId> ids) : VertexSet(universe) {
    for (auto v : ids) insert(v);
  }

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }

  void insert(VertexId v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(VertexId v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
  bool contains(VertexId v) const {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void clear();

  std::size_t size() const;
  bool empty() const;

  /// First member at or after `from`, or npos.
  VertexId next(VertexId from) const;
  VertexId first() const { return next(0); }

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, npos}; }

  std::vector<VertexId> to_vector() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

  std::size_t hash() const;

  std::span<const Word> words() const { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace walkmine
