#pragma once

#include <cstddef>
#include <cstdint>

#include "gpos/fitness.hpp"
#include "gpos/solve_result.hpp"

namespace gpos {

enum class Acceptance {
  /// Metropolis on the fitness gap: accept a worse move when exp(-(inc - cand) / T) > r.
  standard,
  /// The printed rule exp(-fit) / T > r, with acceptance written into the best tracker.
  literal,
};

struct SaParams {
  std::uint64_t max_iterations = 50;
  double initial_temperature = 10.0;
  double cooling_rate = 0.9;
  /// Iterations per temperature plateau; 0 selects ceil(max_iterations / 20).
  std::uint64_t cooling_time = 0;
  /// Single-bit-flip neighbors per iteration; 0 selects max(10, ceil(n / 4)).
  std::size_t neighbor_count = 0;
  std::uint64_t seed = 1;
  Acceptance acceptance = Acceptance::standard;

  /// Copy with the automatic fields filled in for a graph of order n.
  SaParams resolved(std::size_t n) const;
  void validate() const;
};

/// Geometric cooling: after t completed iterations the temperature is
/// T0 * rho^floor(t / cooling_time), applied as repeated multiplication.
class CoolingSchedule {
 public:
  CoolingSchedule(double initial, double rate, std::uint64_t cooling_time)
      : temperature_(initial), rate_(rate), cooling_time_(cooling_time) {}

  double temperature() const { return temperature_; }
  std::uint64_t completed() const { return completed_; }

  /// Marks one iteration as done and cools at plateau boundaries.
  void advance() {
    if (++completed_ % cooling_time_ == 0) temperature_ *= rate_;
  }

 private:
  double temperature_;
  double rate_;
  std::uint64_t cooling_time_;
  std::uint64_t completed_ = 0;
};

SolveResult sa_solve(const IntervalOracle& o, const SaParams& params, const FitnessParams& fp);

}  // namespace gpos
