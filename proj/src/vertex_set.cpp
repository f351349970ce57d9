#include "gpos/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpos {

VertexSet VertexSet::from_members(std::size_t width, std::span<const Vertex> members) {
  VertexSet s(width);
  for (Vertex v : members) {
    if (v >= width)
      throw std::out_of_range("vertex " + std::to_string(v) + " outside set of width " +
                              std::to_string(width));
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::full(std::size_t width) {
  VertexSet s(width);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  if (const std::size_t tail = width % kWordBits; tail != 0)
    s.words_.back() = (Word{1} << tail) - 1;
  return s;
}

VertexSet VertexSet::from_string(std::string_view bits) {
  VertexSet s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      s.insert(static_cast<Vertex>(i));
    else if (bits[i] != '0')
      throw std::invalid_argument("characteristic string may only contain 0 and 1");
  }
  return s;
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::swap_bits(Vertex i, Vertex j) {
  const bool bi = contains(i);
  const bool bj = contains(j);
  assign(i, bj);
  assign(j, bi);
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

bool VertexSet::intersects(std::span<const Word> other) const {
  const std::size_t n = std::min(words_.size(), other.size());
  for (std::size_t i = 0; i < n; ++i)
    if ((words_[i] & other[i]) != 0) return true;
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Vertex VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0)
      return static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w])));
  return static_cast<Vertex>(width_);
}

Vertex VertexSet::next(Vertex v) const {
  std::size_t pos = static_cast<std::size_t>(v) + 1;
  if (pos >= width_) return static_cast<Vertex>(width_);
  std::size_t w = pos / kWordBits;
  Word bits = words_[w] & (~Word{0} << (pos % kWordBits));
  while (true) {
    if (bits != 0)
      return static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
    if (++w == words_.size()) return static_cast<Vertex>(width_);
    bits = words_[w];
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each_member(*this, [&](Vertex v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::string out(width_, '0');
  for_each_member(*this, [&](Vertex v) { out[v] = '1'; });
  return out;
}

bool VertexSet::lex_less(const VertexSet& other) const {
  // The first differing position decides; the set holding a 0 there is smaller.
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const Word diff = words_[w] ^ other.words_[w];
    if (diff != 0) {
      const Word lowest = diff & (~diff + 1);
      return (words_[w] & lowest) == 0;
    }
  }
  return false;
}

VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

}  // namespace gpos
