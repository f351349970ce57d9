#include "gpos/annealing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gpos {

SaParams SaParams::resolved(std::size_t n) const {
  SaParams p = *this;
  if (p.cooling_time == 0) p.cooling_time = std::max<std::uint64_t>(1, (max_iterations + 19) / 20);
  if (p.neighbor_count == 0) p.neighbor_count = std::max<std::size_t>(10, (n + 3) / 4);
  p.neighbor_count = std::min(p.neighbor_count, n);
  return p;
}

void SaParams::validate() const {
  if (!(initial_temperature > 0)) throw std::invalid_argument("SA initial temperature must be positive");
  if (!(cooling_rate > 0 && cooling_rate < 1)) throw std::invalid_argument("SA cooling rate must lie in (0, 1)");
  if (cooling_time < 1) throw std::invalid_argument("SA cooling time must be at least 1");
  if (neighbor_count < 1) throw std::invalid_argument("SA needs at least one neighbor per iteration");
  if (max_iterations < 1) throw std::invalid_argument("SA needs at least one iteration");
}

SolveResult sa_solve(const IntervalOracle& o, const SaParams& raw, const FitnessParams& fp) {
  const std::size_t n = o.order();
  const SaParams params = raw.resolved(n);
  params.validate();
  fp.validate(n);
  const auto start = std::chrono::steady_clock::now();
  Rng rng(params.seed);

  VertexSet current = random_pair(n, rng);
  std::int64_t current_fit = fitness(o, current, fp);
  VertexSet best = current;
  std::int64_t best_fit = current_fit;

  CoolingSchedule schedule(params.initial_temperature, params.cooling_rate, params.cooling_time);
  std::vector<Vertex> positions(n);
  std::iota(positions.begin(), positions.end(), Vertex{0});

  for (std::uint64_t it = 0; it < params.max_iterations; ++it) {
    // k distinct flip positions by a partial Fisher-Yates shuffle.
    VertexSet candidate;
    std::int64_t candidate_fit = 0;
    for (std::size_t k = 0; k < params.neighbor_count; ++k) {
      const std::size_t pick = k + rng.below(n - k);
      std::swap(positions[k], positions[pick]);
      VertexSet neighbor = current;
      neighbor.flip(positions[k]);
      const std::int64_t f = fitness(o, neighbor, fp);
      if (k == 0 || f > candidate_fit) {
        candidate = std::move(neighbor);
        candidate_fit = f;
      }
    }

    const double t = schedule.temperature();
    if (params.acceptance == Acceptance::standard) {
      bool accept = candidate_fit > current_fit;
      if (!accept) {
        const double r = rng.uniform01();
        accept = std::exp(-static_cast<double>(current_fit - candidate_fit) / t) > r;
      }
      if (accept) {
        current = std::move(candidate);
        current_fit = candidate_fit;
        if (current_fit > best_fit) {
          best = current;
          best_fit = current_fit;
        }
      }
    } else {
      current = std::move(candidate);
      current_fit = candidate_fit;
      bool take = current_fit > best_fit;
      if (!take) {
        const double r = rng.uniform01();
        take = std::exp(-static_cast<double>(current_fit)) / t > r;
      }
      if (take) {
        best = current;
        best_fit = current_fit;
      }
    }
    schedule.advance();
  }

  SolveResult r;
  r.method = Method::sa;
  r.raw_fitness = best_fit;
  r.feasible_before_repair = is_general_position(o, best);
  r.best_set = repair(o, std::move(best));
  r.size = r.best_set.count();
  r.iterations_run = params.max_iterations;
  r.seed = params.seed;
  r.time = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace gpos
