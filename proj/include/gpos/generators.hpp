#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gpos/graph.hpp"

namespace gpos {

inline constexpr unsigned kMaxHypercubeDimension = 20;

/// Q_d: vertex i is its binary label, i ~ j iff i XOR j is a power of two.
Graph hypercube(unsigned dimension);

/// Cay(Z_n, conn): i ~ j iff (j - i) mod n is in conn. The connection set must be
/// nonempty, exclude 0, be closed under c -> n - c, and n >= 3.
Graph circulant(std::size_t n, std::span<const std::size_t> conn);

Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete(std::size_t n);

}  // namespace gpos
