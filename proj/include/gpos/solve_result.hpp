#pragma once

#include <chrono>
#include <cstdint>
#include <string_view>

#include "gpos/vertex_set.hpp"

namespace gpos {

enum class Method { ga, sa, bb, bf };

std::string_view method_name(Method m);  // "GA", "SA", "BB", "BF"

struct SolveResult {
  Method method = Method::ga;
  /// Always a general position set.
  VertexSet best_set;
  std::size_t size = 0;
  /// Fitness of the engine's final answer before repair.
  std::int64_t raw_fitness = 0;
  bool feasible_before_repair = true;
  std::uint64_t iterations_run = 0;
  std::uint64_t seed = 0;
  std::chrono::duration<double> time{};
};

}  // namespace gpos
