#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gpos/interval_oracle.hpp"
#include "gpos/vertex_set.hpp"

namespace gpos {

inline constexpr std::size_t kBruteForceLimit = 22;

struct Incumbent {
  std::size_t size;
  std::uint64_t nodes;  // nodes explored when it was found
  VertexSet witness;
};

struct ExactResult {
  std::size_t gp = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> time{};
  /// False only when the search was cancelled; gp is then a lower bound.
  bool optimal = true;
  std::vector<Incumbent> incumbents;
};

/// Exhaustive enumeration of all general position sets by ascending extension.
/// Among maximum sets, returns the one with the lexicographically smallest
/// characteristic vector. Throws std::invalid_argument when order() exceeds
/// kBruteForceLimit.
ExactResult brute_force_gp(const IntervalOracle& o);

struct BranchAndBoundOptions {
  /// Adds a clique-cover bound on the pairwise conflict graph of the candidates
  /// to the plain |S| + |C| bound.
  bool cover_bound = true;
  const std::atomic<bool>* cancel = nullptr;
  std::optional<std::chrono::milliseconds> time_limit;
};

/// Depth-first branch and bound over a static vertex order (most frequent
/// interval members first). The witness is the first maximum set reached in
/// that order.
ExactResult branch_and_bound_gp(const IntervalOracle& o, const BranchAndBoundOptions& options = {});

}  // namespace gpos
