#include "gpos/run_record.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <tuple>

namespace gpos {

namespace {

nlohmann::json echo_params(const SolverConfig& c, std::size_t n, std::int64_t big_m) {
  nlohmann::json p = nlohmann::json::object();
  switch (c.method) {
    case Method::ga:
      p["population_size"] = c.ga.population_size;
      p["max_iterations"] = c.ga.max_iterations;
      p["big_m"] = big_m;
      break;
    case Method::sa: {
      const SaParams s = c.sa.resolved(n);
      p["max_iterations"] = s.max_iterations;
      p["initial_temperature"] = s.initial_temperature;
      p["cooling_rate"] = s.cooling_rate;
      p["cooling_time"] = s.cooling_time;
      p["neighbor_count"] = s.neighbor_count;
      p["acceptance"] = s.acceptance == Acceptance::standard ? "standard" : "literal";
      p["big_m"] = big_m;
      break;
    }
    case Method::bb: p["cover_bound"] = c.bb.cover_bound; break;
    case Method::bf: break;
  }
  return p;
}

}  // namespace

RunRecord run_solver(const IntervalOracle& o, const std::string& graph, const SolverConfig& config,
                     std::uint64_t seed, bool timing) {
  const std::size_t n = o.order();
  const FitnessParams fp{config.big_m.value_or(static_cast<std::int64_t>(n) + 1)};

  RunRecord r;
  r.graph = graph;
  r.n = n;
  r.method = config.method;
  r.params = echo_params(config, n, fp.big_m);

  VertexSet witness;
  std::chrono::duration<double> elapsed{};
  switch (config.method) {
    case Method::ga: {
      GaParams p = config.ga;
      p.seed = seed;
      auto res = ga_solve(o, p, fp);
      witness = std::move(res.best_set);
      elapsed = res.time;
      r.seed = seed;
      break;
    }
    case Method::sa: {
      SaParams p = config.sa;
      p.seed = seed;
      auto res = sa_solve(o, p, fp);
      witness = std::move(res.best_set);
      elapsed = res.time;
      r.seed = seed;
      break;
    }
    case Method::bb: {
      auto res = branch_and_bound_gp(o, config.bb);
      witness = std::move(res.witness);
      elapsed = res.time;
      r.certified_optimal = res.optimal;
      break;
    }
    case Method::bf: {
      auto res = brute_force_gp(o);
      witness = std::move(res.witness);
      elapsed = res.time;
      r.certified_optimal = true;
      break;
    }
  }
  if (!is_general_position(o, witness))
    throw InternalError(std::string(method_name(config.method)) + " returned a set that is not in general position on " +
                        graph);
  r.size = witness.count();
  r.witness = witness.members();
  r.wall_time_ms = timing ? elapsed.count() * 1000.0 : 0.0;
  return r;
}

std::vector<RunRecord> run_seeds(const IntervalOracle& o, const std::string& graph, const SolverConfig& config,
                                 std::uint64_t first_seed, std::size_t runs, std::size_t threads, bool timing) {
  std::vector<RunRecord> out(runs);
  std::vector<std::string> errors(runs);
  const auto count = static_cast<std::int64_t>(runs);
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(std::max<std::size_t>(1, threads)))
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[i] = run_solver(o, graph, config, first_seed + static_cast<std::uint64_t>(i), timing);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw InternalError(e);
  return out;
}

const RunRecord& best_of(const std::vector<RunRecord>& records) {
  if (records.empty()) throw std::invalid_argument("no records");
  return *std::max_element(records.begin(), records.end(),
                           [](const RunRecord& a, const RunRecord& b) { return a.size < b.size; });
}

std::size_t harness_threads() {
  const char* env = std::getenv("GP_SOLVE_THREADS");
  if (!env || !*env) return 1;
  try {
    const long v = std::stol(env);
    return v >= 1 ? static_cast<std::size_t>(v) : 1;
  } catch (const std::exception&) {
    return 1;
  }
}

nlohmann::json to_json(const RunRecord& r) {
  return {
      {"graph", r.graph},
      {"n", r.n},
      {"method", std::string(method_name(r.method))},
      {"size", r.size},
      {"certified_optimal", r.certified_optimal},
      {"params", r.params},
      {"seed", r.seed},
      {"wall_time_ms", r.wall_time_ms},
      {"witness", r.witness},
  };
}

std::string records_to_json(std::vector<RunRecord> records) {
  std::stable_sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::make_tuple(a.graph, method_name(a.method), a.seed) <
           std::make_tuple(b.graph, method_name(b.method), b.seed);
  });
  nlohmann::json doc;
  doc["artifact_version"] = kArtifactVersion;
  doc["records"] = nlohmann::json::array();
  for (const auto& r : records) doc["records"].push_back(to_json(r));
  return doc.dump(2) + "\n";
}

}  // namespace gpos
