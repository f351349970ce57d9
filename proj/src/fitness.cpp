#include "gpos/fitness.hpp"

#include <stdexcept>
#include <string>

namespace gpos {

void FitnessParams::validate(std::size_t n) const {
  if (big_m <= static_cast<std::int64_t>(n))
    throw std::invalid_argument("penalty weight " + std::to_string(big_m) + " must exceed the graph order " +
                                std::to_string(n));
}

std::int64_t fitness(const IntervalOracle& o, const VertexSet& s, const FitnessParams& p) {
  return static_cast<std::int64_t>(s.count()) - p.big_m * static_cast<std::int64_t>(count_violations(o, s));
}

std::vector<std::int64_t> evaluate_fitness(const IntervalOracle& o, std::span<const VertexSet> batch,
                                           const FitnessParams& p, Execution exec) {
  std::vector<std::int64_t> out(batch.size());
  const auto count = static_cast<std::int64_t>(batch.size());
  if (exec == Execution::serial) {
    for (std::int64_t i = 0; i < count; ++i) out[i] = fitness(o, batch[i], p);
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) out[i] = fitness(o, batch[i], p);
  }
  return out;
}

VertexSet crossover(const VertexSet& a, const VertexSet& b) {
  if (a.width() != b.width()) throw std::invalid_argument("crossover of sets with different widths");
  return a | b;
}

VertexSet mutate_at(const VertexSet& s, Vertex i, Vertex j) {
  VertexSet out = s;
  out.swap_bits(i, j);
  return out;
}

VertexSet mutate(const VertexSet& s, Rng& rng) {
  if (s.width() < 2) throw std::invalid_argument("mutation needs at least two positions");
  const auto i = static_cast<Vertex>(rng.below(s.width()));
  auto j = static_cast<Vertex>(rng.below(s.width() - 1));
  if (j >= i) ++j;
  return mutate_at(s, i, j);
}

VertexSet repair(const IntervalOracle& o, VertexSet s) {
  std::vector<std::size_t> involvement(o.order());
  while (true) {
    const auto violations = find_violations(o, s);
    if (violations.empty()) return s;
    std::fill(involvement.begin(), involvement.end(), 0);
    for (const auto& v : violations) {
      ++involvement[v.u];
      ++involvement[v.v];
      VertexSet witnesses = o.interval_set(v.u, v.v);
      witnesses &= s;
      for_each_member(witnesses, [&](Vertex x) { ++involvement[x]; });
    }
    Vertex worst = 0;
    for (Vertex x = 0; x < o.order(); ++x)
      if (involvement[x] >= involvement[worst] && involvement[x] > 0) worst = x;
    s.erase(worst);
  }
}

VertexSet random_pair(std::size_t n, Rng& rng) {
  if (n < 2) return VertexSet::full(n);
  const auto a = static_cast<Vertex>(rng.below(n));
  auto b = static_cast<Vertex>(rng.below(n - 1));
  if (b >= a) ++b;
  const Vertex members[] = {a, b};
  return VertexSet::from_members(n, members);
}

}  // namespace gpos
