#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gpos {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Packed bitset over the vertices 0..width-1 of a graph.
///
/// Bits above width-1 are always zero, so popcount is the cardinality and
/// word-wise comparisons are meaningful.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t width) : width_(width), words_(words_for(width), 0) {}

  static VertexSet from_members(std::size_t width, std::span<const Vertex> members);
  static VertexSet full(std::size_t width);
  /// Parses a characteristic string like "010011" (character i is vertex i).
  static VertexSet from_string(std::string_view bits);

  std::size_t width() const { return width_; }
  std::size_t count() const;
  bool empty() const;

  bool contains(Vertex v) const { return (words_[v / kWordBits] >> (v % kWordBits)) & 1U; }
  void insert(Vertex v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(Vertex v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
  void flip(Vertex v) { words_[v / kWordBits] ^= Word{1} << (v % kWordBits); }
  void assign(Vertex v, bool value) {
    if (value)
      insert(v);
    else
      erase(v);
  }
  void swap_bits(Vertex i, Vertex j);
  void clear();

  bool intersects(const VertexSet& other) const { return intersects(other.words()); }
  bool intersects(std::span<const Word> other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  /// Removes every member of other.
  VertexSet& subtract(const VertexSet& other);

  /// Smallest member, or width() when empty.
  Vertex first() const;
  /// Smallest member strictly greater than v, or width().
  Vertex next(Vertex v) const;

  std::vector<Vertex> members() const;
  std::string to_string() const;

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  /// Lexicographic order on characteristic vectors x_0 x_1 ... x_{n-1}, with 0 < 1.
  bool lex_less(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<Word> words_;
};

VertexSet operator|(VertexSet a, const VertexSet& b);
VertexSet operator&(VertexSet a, const VertexSet& b);

/// Calls fn(v) for each set bit of a raw word span, ascending.
template <typename Fn>
void for_each_bit(std::span<const Word> words, Fn&& fn) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    Word bits = words[w];
    while (bits != 0) {
      fn(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
}

template <typename Fn>
void for_each_member(const VertexSet& s, Fn&& fn) {
  for_each_bit(s.words(), std::forward<Fn>(fn));
}

}  // namespace gpos
