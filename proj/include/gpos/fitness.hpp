#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gpos/execution.hpp"
#include "gpos/interval_oracle.hpp"
#include "gpos/rng.hpp"

namespace gpos {

struct FitnessParams {
  /// Penalty per violating pair. Must exceed the order of the graph.
  std::int64_t big_m = 0;

  static FitnessParams for_order(std::size_t n) { return {static_cast<std::int64_t>(n) + 1}; }
  /// Throws std::invalid_argument unless big_m > n.
  void validate(std::size_t n) const;
};

/// |s| - big_m * violations(s).
std::int64_t fitness(const IntervalOracle& o, const VertexSet& s, const FitnessParams& p);

/// Fitness of every set in the batch, in order.
std::vector<std::int64_t> evaluate_fitness(const IntervalOracle& o, std::span<const VertexSet> batch,
                                           const FitnessParams& p, Execution exec = Execution::parallel);

/// Union of the parents.
VertexSet crossover(const VertexSet& a, const VertexSet& b);

/// Swaps the bits at two distinct uniformly drawn positions. Width must be >= 2.
VertexSet mutate(const VertexSet& s, Rng& rng);
VertexSet mutate_at(const VertexSet& s, Vertex i, Vertex j);

/// Deletes vertices until no violating pair remains. Each round removes the
/// member involved in the most violating pairs, as an endpoint or a witness;
/// ties remove the highest index.
VertexSet repair(const IntervalOracle& o, VertexSet s);

/// A uniformly random 2-element set (the whole vertex set when n < 2).
VertexSet random_pair(std::size_t n, Rng& rng);

}  // namespace gpos
