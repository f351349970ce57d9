#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gpos/fitness.hpp"
#include "gpos/solve_result.hpp"

namespace gpos {

struct GaParams {
  std::size_t population_size = 20;
  std::uint64_t max_iterations = 200;
  std::uint64_t seed = 1;
  Execution evaluation = Execution::parallel;

  void validate() const;
};

/// Observer hook for tests: called after every generation with the survivors.
struct GaTrace {
  std::vector<std::size_t> population_sizes;
};

/// Genetic search with union crossover, swap mutation and merge-and-truncate
/// survivor selection. Deterministic for a given seed.
SolveResult ga_solve(const IntervalOracle& o, const GaParams& params, const FitnessParams& fp,
                     GaTrace* trace = nullptr);

}  // namespace gpos
