#include "gpos/graph.hpp"

#include <algorithm>
#include <queue>

namespace gpos {

namespace {

std::string edge_name(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw GraphError("graph must have at least one vertex");

  Graph g;
  g.adjacency_.resize(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u >= n || v >= n)
      throw GraphError("edge " + edge_name(edges[i]) + " has an endpoint outside 0.." + std::to_string(n - 1), i);
    if (u == v) throw GraphError("self-loop " + edge_name(edges[i]), i);
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }

  for (Vertex v = 0; v < n; ++v) {
    auto& row = g.adjacency_[v];
    std::sort(row.begin(), row.end());
    if (auto dup = std::adjacent_find(row.begin(), row.end()); dup != row.end()) {
      const Vertex w = *dup;
      const Edge key{std::min(v, w), std::max(v, w)};
      // Report the second occurrence, which is the one that made it a duplicate.
      std::size_t seen = 0;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge e{std::min(edges[i].first, edges[i].second), std::max(edges[i].first, edges[i].second)};
        if (e == key && ++seen == 2) throw GraphError("duplicate edge " + edge_name(edges[i]), i);
      }
      throw GraphError("duplicate edge " + edge_name(key));
    }
  }
  g.edge_count_ = edges.size();

  std::vector<char> seen(n, 0);
  std::queue<Vertex> frontier;
  seen[0] = 1;
  frontier.push(0);
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.adjacency_[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
  }
  if (reached != n) {
    const auto missing = static_cast<Vertex>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
    throw GraphError("graph is disconnected: vertex " + std::to_string(missing) +
                     " is not reachable from vertex 0 (" + std::to_string(reached) + " of " +
                     std::to_string(n) + " reached)");
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

}  // namespace gpos
