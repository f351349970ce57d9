#include "gpos/genetic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gpos {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::ga: return "GA";
    case Method::sa: return "SA";
    case Method::bb: return "BB";
    case Method::bf: return "BF";
  }
  return "?";
}

void GaParams::validate() const {
  if (population_size < 2) throw std::invalid_argument("GA population size must be at least 2");
  if (max_iterations < 1) throw std::invalid_argument("GA needs at least one iteration");
}

SolveResult ga_solve(const IntervalOracle& o, const GaParams& params, const FitnessParams& fp, GaTrace* trace) {
  params.validate();
  fp.validate(o.order());
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = o.order();
  const std::size_t np = params.population_size;
  Rng rng(params.seed);

  std::vector<VertexSet> population;
  population.reserve(np);
  for (std::size_t i = 0; i < np; ++i) population.push_back(random_pair(n, rng));
  std::vector<std::int64_t> scores = evaluate_fitness(o, population, fp, params.evaluation);

  std::vector<VertexSet> pool;
  std::vector<std::int64_t> pool_scores;
  std::vector<std::size_t> rank;
  for (std::uint64_t it = 0; it < params.max_iterations; ++it) {
    pool = population;
    for (std::size_t k = 0; k < np / 2; ++k) {
      const std::size_t a = rng.below(np);
      std::size_t b = rng.below(np - 1);
      if (b >= a) ++b;
      pool.push_back(crossover(population[a], population[b]));
    }
    for (std::size_t k = 0; k < np; ++k) {
      const std::size_t pick = rng.below(np);
      pool.push_back(n >= 2 ? mutate(population[pick], rng) : population[pick]);
    }

    const auto fresh = evaluate_fitness(o, std::span<const VertexSet>(pool).subspan(np), fp, params.evaluation);
    pool_scores = scores;
    pool_scores.insert(pool_scores.end(), fresh.begin(), fresh.end());

    rank.resize(pool.size());
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    std::stable_sort(rank.begin(), rank.end(), [&](std::size_t x, std::size_t y) {
      if (pool_scores[x] != pool_scores[y]) return pool_scores[x] > pool_scores[y];
      return pool[x].lex_less(pool[y]);
    });

    // Survivors are the n_p best distinct individuals; copies only fill up a
    // pool with fewer than n_p distinct members.
    std::size_t kept = 0;
    std::vector<char> used(rank.size(), 0);
    for (std::size_t i = 0; i < rank.size() && kept < np; ++i)
      if (i == 0 || pool[rank[i]] != pool[rank[i - 1]]) {
        population[kept] = pool[rank[i]];
        scores[kept++] = pool_scores[rank[i]];
        used[i] = 1;
      }
    for (std::size_t i = 0; i < rank.size() && kept < np; ++i)
      if (!used[i]) {
        population[kept] = pool[rank[i]];
        scores[kept++] = pool_scores[rank[i]];
      }
    if (trace) trace->population_sizes.push_back(population.size());
  }

  SolveResult r;
  r.method = Method::ga;
  r.raw_fitness = scores.front();
  r.feasible_before_repair = is_general_position(o, population.front());
  r.best_set = repair(o, population.front());
  r.size = r.best_set.count();
  r.iterations_run = params.max_iterations;
  r.seed = params.seed;
  r.time = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace gpos
