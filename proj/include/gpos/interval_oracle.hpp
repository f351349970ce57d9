#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gpos/distance_matrix.hpp"
#include "gpos/execution.hpp"
#include "gpos/graph.hpp"
#include "gpos/vertex_set.hpp"

namespace gpos {

/// Interior of the geodesic interval for every unordered vertex pair.
///
/// interval(u, v) holds every w other than u and v with d(u,w) + d(w,v) = d(u,v).
/// Only pairs u < v are stored, as dense bitsets of order() bits each.
class IntervalOracle {
 public:
  static IntervalOracle build(const Graph& g, const DistanceMatrix& d, Execution exec = Execution::parallel);

  std::size_t order() const { return n_; }
  std::size_t words_per_set() const { return stride_; }
  std::size_t pair_count() const { return n_ < 2 ? 0 : n_ * (n_ - 1) / 2; }

  /// Arguments may be given in either order; u != v.
  std::span<const Word> interval(Vertex u, Vertex v) const {
    return std::span<const Word>(bits_).subspan(pair_index(u, v) * stride_, stride_);
  }
  VertexSet interval_set(Vertex u, Vertex v) const;
  bool in_interval(Vertex u, Vertex v, Vertex w) const {
    return (interval(u, v)[w / kWordBits] >> (w % kWordBits)) & 1U;
  }

  /// For each vertex, the number of pairs whose interval contains it.
  std::vector<std::size_t> membership_counts() const;

  friend bool operator==(const IntervalOracle&, const IntervalOracle&) = default;

 private:
  IntervalOracle(std::size_t n) : n_(n), stride_(words_for(n)), bits_(pair_count() * stride_, 0) {}

  std::size_t pair_index(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    // Row u starts after the pairs (i, j), i < u.
    return static_cast<std::size_t>(u) * (2 * n_ - u - 1) / 2 + (v - u - 1);
  }

  std::size_t n_;
  std::size_t stride_;
  std::vector<Word> bits_;
};

inline IntervalOracle build_interval_oracle(const Graph& g, const DistanceMatrix& d,
                                            Execution exec = Execution::parallel) {
  return IntervalOracle::build(g, d, exec);
}

/// A pair {u, v} of members whose interval contains the member witness.
struct Violation {
  Vertex u;
  Vertex v;
  Vertex witness;  // smallest member of s inside interval(u, v)

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Number of unordered member pairs {u, v} of s with interval(u, v) ∩ s nonempty.
/// Each pair counts once no matter how many witnesses it has.
std::size_t count_violations(const IntervalOracle& o, const VertexSet& s);

bool is_general_position(const IntervalOracle& o, const VertexSet& s);

/// All violating pairs in (u, v) lexicographic order.
std::vector<Violation> find_violations(const IntervalOracle& o, const VertexSet& s);

}  // namespace gpos
