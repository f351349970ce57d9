#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gpos/interval_oracle.hpp"

namespace gpos {

/// One row  sum_{l in interval} x_l + M (x_u + x_v) <= 2M  of the model.
struct IlpConstraint {
  Vertex u;
  Vertex v;
  std::vector<Vertex> interval;  // ascending
};

/// Binary program: maximize sum x_j subject to one big-M row per pair with a
/// nonempty interval, M = n.
struct IlpModel {
  std::size_t n = 0;
  std::int64_t big_m = 0;
  std::vector<IlpConstraint> constraints;  // (u, v) ascending

  std::int64_t row_activity(const IlpConstraint& c, std::span<const std::uint8_t> x) const;
  std::int64_t rhs() const { return 2 * big_m; }
  bool satisfied(std::span<const std::uint8_t> x) const;
  std::size_t objective(std::span<const std::uint8_t> x) const;
};

IlpModel build_ilp(const IntervalOracle& o);

/// CPLEX LP text: Maximize / Subject To / Binary / End, byte-deterministic.
std::string write_lp(const IlpModel& m);

}  // namespace gpos
