#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpos/annealing.hpp"
#include "gpos/exact.hpp"
#include "gpos/genetic.hpp"
#include "gpos/interval_oracle.hpp"

namespace gpos {

inline constexpr const char* kArtifactVersion = "1.0.0";

/// Everything needed to launch one solver run apart from the seed.
struct SolverConfig {
  Method method = Method::bb;
  GaParams ga;
  SaParams sa;
  std::optional<std::int64_t> big_m;  // defaults to n + 1
  BranchAndBoundOptions bb;
};

/// One row of results: a single solver run on a single graph.
struct RunRecord {
  std::string graph;
  std::size_t n = 0;
  Method method = Method::bb;
  std::size_t size = 0;
  bool certified_optimal = false;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
  double wall_time_ms = 0;
  std::vector<Vertex> witness;
};

/// Raised when a result contradicts a solver guarantee.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Runs the solver (timing only the solver call) and re-verifies the witness;
/// throws InternalError if it is not a general position set.
RunRecord run_solver(const IntervalOracle& o, const std::string& graph, const SolverConfig& config,
                     std::uint64_t seed, bool timing = true);

/// Runs seeds first_seed .. first_seed + runs - 1, up to threads at once.
/// Results come back in seed order.
std::vector<RunRecord> run_seeds(const IntervalOracle& o, const std::string& graph, const SolverConfig& config,
                                 std::uint64_t first_seed, std::size_t runs, std::size_t threads,
                                 bool timing = true);

/// Best record by size; ties keep the earliest.
const RunRecord& best_of(const std::vector<RunRecord>& records);

/// Harness parallelism from GP_SOLVE_THREADS (default 1).
std::size_t harness_threads();

nlohmann::json to_json(const RunRecord& r);
/// {"artifact_version": ..., "records": [...]}, records sorted by (graph, method, seed).
std::string records_to_json(std::vector<RunRecord> records);

}  // namespace gpos
