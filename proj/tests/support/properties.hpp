#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace gpos::ref {

struct PropertyResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return cases > 0 && failures == 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

/// Intervals equal the union of shortest-path interiors from DFS enumeration (n <= 8).
PropertyResult interval_characterization_property(std::size_t cases, std::uint64_t seed);
/// Every subset of a general position set is in general position.
PropertyResult hereditary_property(std::size_t cases, std::uint64_t seed);
/// Union crossover is commutative, associative, idempotent, has the empty set as identity.
PropertyResult crossover_laws_property(std::size_t cases, std::uint64_t seed);
/// Swap mutation keeps the cardinality and moves at most two bits.
PropertyResult mutate_popcount_property(std::size_t cases, std::uint64_t seed);
/// CoolingSchedule temperature after t iterations equals T0 * rho^floor(t / cooling_time).
PropertyResult temperature_schedule_property(std::size_t cases, std::uint64_t seed);

}  // namespace gpos::ref
