#pragma once

#include <cstdint>
#include <vector>

#include "gpos/execution.hpp"
#include "gpos/graph.hpp"

namespace gpos {

using Distance = std::uint32_t;

/// Dense all-pairs hop counts.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0) {}

  std::size_t order() const { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  Distance& at(Vertex u, Vertex v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }

  std::span<const Distance> row(Vertex u) const {
    return std::span<const Distance>(d_).subspan(static_cast<std::size_t>(u) * n_, n_);
  }
  std::span<Distance> row(Vertex u) { return std::span<Distance>(d_).subspan(static_cast<std::size_t>(u) * n_, n_); }

  Distance diameter() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Distance> d_;
};

/// One BFS per source vertex; the parallel kernel distributes sources over threads.
DistanceMatrix all_pairs_distances(const Graph& g, Execution exec = Execution::parallel);

}  // namespace gpos
