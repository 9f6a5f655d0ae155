#include "walkmine/vertex_set.hpp"

#include <cassert>

namespace walkmine {

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  if (auto tail = universe % kWordBits; tail != 0) s.words_.back() = (Word{1} << tail) - 1;
  return s;
}

void VertexSet::clear() {
  for (auto& w : words_) w = 0;
}

std::size_t VertexSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

VertexId VertexSet::next(VertexId from) const {
  if (from >= universe_) return npos;
  std::size_t wi = from / kWordBits;
  Word w = words_[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w != 0) return static_cast<VertexId>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
    if (++wi >= words_.size()) return npos;
    w = words_[wi];
  }
}

std::vector<VertexId> VertexSet::to_vector() const {
  std::vector<VertexId> out;
  out.reserve(size());
  for (auto v : *this) out.push_back(v);
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  if (a.universe_ != b.universe_) return a.universe_ <=> b.universe_;
  // At the lowest differing id x, the set holding x is smaller unless the
  // other set has no members above x (it is then a proper prefix).
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const auto diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    const auto bit = static_cast<std::size_t>(std::countr_zero(diff));
    const auto x = static_cast<VertexId>(i * VertexSet::kWordBits + bit);
    const bool a_has = a.contains(x);
    const VertexSet& other = a_has ? b : a;
    const bool other_continues = other.next(x + 1) != VertexSet::npos;
    const bool a_less = a_has ? other_continues : !other_continues;
    return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t VertexSet::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL ^ universe_;
  for (auto w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

}  // namespace walkmine
