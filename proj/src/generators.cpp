#include "gpos/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace gpos {

Graph hypercube(unsigned dimension) {
  if (dimension < 1 || dimension > kMaxHypercubeDimension)
    throw std::invalid_argument("hypercube dimension must be in 1.." + std::to_string(kMaxHypercubeDimension));
  const std::size_t n = std::size_t{1} << dimension;
  std::vector<Edge> edges;
  edges.reserve(dimension * n / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (unsigned b = 0; b < dimension; ++b) {
      const std::size_t j = i ^ (std::size_t{1} << b);
      if (i < j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  return Graph::build(n, edges);
}

Graph circulant(std::size_t n, std::span<const std::size_t> conn) {
  if (n < 3) throw std::invalid_argument("circulant modulus must be at least 3");
  if (conn.empty()) throw std::invalid_argument("circulant connection set is empty");
  const std::set<std::size_t> steps(conn.begin(), conn.end());
  for (std::size_t c : steps) {
    if (c % n == 0) throw std::invalid_argument("circulant connection set contains 0");
    if (c >= n) throw std::invalid_argument("connection residue " + std::to_string(c) + " is not reduced mod " + std::to_string(n));
    if (!steps.contains(n - c))
      throw std::invalid_argument("connection set is not symmetric: " + std::to_string(c) + " present but " +
                                  std::to_string(n - c) + " missing");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c : steps) {
      const std::size_t j = (i + c) % n;
      if (i < j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  std::sort(edges.begin(), edges.end());
  return Graph::build(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<Vertex>(i), b = static_cast<Vertex>((i + 1) % n);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph::build(n, edges);
}

Graph path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::build(n, edges);
}

Graph complete(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::build(n, edges);
}

}  // namespace gpos
