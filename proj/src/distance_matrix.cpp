#include "gpos/distance_matrix.hpp"

#include <algorithm>

namespace gpos {

namespace {

void bfs_row(const Graph& g, Vertex source, std::span<Distance> dist, std::vector<Vertex>& queue) {
  constexpr Distance kUnseen = ~Distance{0};
  std::fill(dist.begin(), dist.end(), kUnseen);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u))
      if (dist[w] == kUnseen) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
}

}  // namespace

Distance DistanceMatrix::diameter() const {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

DistanceMatrix all_pairs_distances(const Graph& g, Execution exec) {
  const auto n = static_cast<std::int64_t>(g.order());
  DistanceMatrix d(g.order());
  if (exec == Execution::serial) {
    std::vector<Vertex> queue;
    queue.reserve(g.order());
    for (std::int64_t s = 0; s < n; ++s) bfs_row(g, static_cast<Vertex>(s), d.row(static_cast<Vertex>(s)), queue);
    return d;
  }
#pragma omp parallel
  {
    std::vector<Vertex> queue;
    queue.reserve(g.order());
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < n; ++s) bfs_row(g, static_cast<Vertex>(s), d.row(static_cast<Vertex>(s)), queue);
  }
  return d;
}

}  // namespace gpos
