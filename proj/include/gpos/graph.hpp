#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpos/vertex_set.hpp"

namespace gpos {

using Edge = std::pair<Vertex, Vertex>;

/// Raised when an edge list does not describe a simple connected graph.
class GraphError : public std::runtime_error {
 public:
  GraphError(const std::string& what, std::optional<std::size_t> edge_index = std::nullopt)
      : std::runtime_error(what), edge_index_(edge_index) {}

  /// Position of the offending edge in the input list, when one is to blame.
  std::optional<std::size_t> edge_index() const { return edge_index_; }

 private:
  std::optional<std::size_t> edge_index_;
};

/// Immutable simple connected undirected graph on vertices 0..n-1.
class Graph {
 public:
  /// Validates and builds. Throws GraphError on self-loops, duplicate edges,
  /// out-of-range endpoints, n == 0, or a disconnected result.
  static Graph build(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph::build(n, edges); }

}  // namespace gpos
