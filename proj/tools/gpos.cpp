// gpos: general position number solvers and benchmark harness.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpos/distance_matrix.hpp"
#include "gpos/graph_io.hpp"
#include "gpos/graph_spec.hpp"
#include "gpos/ilp.hpp"
#include "gpos/interval_oracle.hpp"
#include "gpos/run_record.hpp"
#include "gpos/table1.hpp"

namespace {

using namespace gpos;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedGraph {
  std::string name;
  Graph graph;
};

LoadedGraph load_graph(const std::string& text) {
  // A bare existing path is accepted as shorthand for file:path.
  std::string spec = text;
  if (!spec.starts_with("file:") && !spec.starts_with("cay:") && std::filesystem::is_regular_file(spec))
    spec = "file:" + spec;
  const GraphSpec gs = parse_graph_spec(spec);
  return {gs.name(), make_graph(gs)};
}

IntervalOracle oracle_for(const Graph& g) { return IntervalOracle::build(g, all_pairs_distances(g)); }

VertexSet parse_set(const std::string& text, std::size_t n) {
  VertexSet s(n);
  std::string_view rest = text;
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  if (trim(rest).empty()) return s;
  while (true) {
    const auto comma = rest.find(',');
    const auto token = trim(rest.substr(0, comma));
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
      throw UsageError("malformed vertex set '" + text + "': expected comma-separated vertex indices");
    if (v >= n) throw UsageError("vertex " + std::to_string(v) + " is out of range for a graph of order " + std::to_string(n));
    s.insert(static_cast<Vertex>(v));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return s;
}

std::string format_members(const std::vector<Vertex>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) out += (i ? "," : "") + std::to_string(members[i]);
  return out + "}";
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
}

const BenchInstance* known_instance(const std::string& name) {
  for (const auto& inst : table1_instances())
    if (inst.name == name) return &inst;
  return nullptr;
}

Method parse_method(const std::string& m) {
  if (m == "bf") return Method::bf;
  if (m == "bb") return Method::bb;
  if (m == "ga") return Method::ga;
  if (m == "sa") return Method::sa;
  throw UsageError("unknown method '" + m + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"General position number solvers: exact search, GA, SA, and ILP export"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Emit a built-in graph as an edge list or graph6");
  std::string gen_spec, gen_out, gen_format = "edge-list";
  gen->add_option("spec", gen_spec, "Graph spec (qN, cN, pN, kN, cay:N:c1,c2,...)")->required();
  gen->add_option("-o,--output", gen_out, "Output file (stdout when omitted)");
  gen->add_option("--format", gen_format, "edge-list or graph6");

  // solve
  auto* solve = app.add_subcommand("solve", "Compute a general position set");
  std::string solve_graph, solve_method, solve_json;
  std::optional<std::size_t> np, neighbors;
  std::optional<std::uint64_t> maxit, cooling_time;
  std::optional<double> t0, rho, time_limit;
  std::optional<std::int64_t> big_m;
  std::string acceptance = "standard";
  std::uint64_t seed = 1;
  std::size_t runs = 1;
  bool no_timing = false, no_cover = false;
  solve->add_option("--graph", solve_graph, "Graph spec or file")->required();
  solve->add_option("--method", solve_method, "bf | bb | ga | sa")->required()->check(CLI::IsMember({"bf", "bb", "ga", "sa"}));
  solve->add_option("--np", np, "GA population size");
  solve->add_option("--maxit", maxit, "GA/SA iterations");
  solve->add_option("--t0", t0, "SA initial temperature");
  solve->add_option("--rho", rho, "SA cooling rate");
  solve->add_option("--cooling-time", cooling_time, "SA iterations per temperature plateau");
  solve->add_option("--neighbors", neighbors, "SA neighbors per iteration");
  solve->add_option("--acceptance", acceptance, "SA rule: standard | literal")
      ->check(CLI::IsMember({"standard", "literal"}));
  solve->add_option("--big-m", big_m, "Penalty weight (default n + 1)");
  solve->add_option("--seed", seed, "First RNG seed");
  solve->add_option("--runs", runs, "Independent seeded runs (GA/SA)")->check(CLI::PositiveNumber);
  solve->add_option("--time-limit", time_limit, "BB time limit in seconds");
  solve->add_flag("--no-cover-bound", no_cover, "BB: use only the |S| + |C| bound");
  solve->add_option("--json", solve_json, "Write run records as JSON");
  solve->add_flag("--no-timing", no_timing, "Record wall times as 0 (byte-reproducible JSON)");

  // export-lp
  auto* lp = app.add_subcommand("export-lp", "Write the integer program in LP format");
  std::string lp_graph, lp_out;
  lp->add_option("--graph", lp_graph, "Graph spec or file")->required();
  lp->add_option("-o,--output", lp_out, "Output file ('-' for stdout)")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Check whether a vertex set is in general position");
  std::string verify_graph, verify_set;
  verify->add_option("--graph", verify_graph, "Graph spec or file")->required();
  verify->add_option("--set", verify_set, "Comma-separated vertices")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Benchmark harness");
  bench->require_subcommand(1);
  auto* table1 = bench->add_subcommand("table1", "Exact, GA and SA results for the reference instances");
  Table1Options topts;
  std::string bench_json, fullerenes;
  bool skip_q7 = false, bench_no_timing = false;
  table1->add_option("--runs", topts.runs, "Seeded runs per heuristic")->check(CLI::PositiveNumber);
  table1->add_option("--seed", topts.first_seed, "First seed");
  table1->add_option("--json", bench_json, "Write all run records as JSON");
  table1->add_option("--fullerenes", fullerenes, "Directory holding C46/C48 adjacency files");
  table1->add_flag("--reference-isomers", topts.fullerenes_are_reference_isomers,
                   "Assert fullerene rows against the reference values");
  table1->add_flag("--skip-q7-exact", skip_q7, "Skip the exact search on Q7");
  table1->add_option("--only", topts.only, "Restrict to the named instances");
  table1->add_flag("--no-timing", bench_no_timing, "Record wall times as 0");

  // draw
  auto* draw = app.add_subcommand("draw", "Render a graph with a highlighted set as DOT");
  std::string draw_graph, draw_set, draw_out;
  draw->add_option("--graph", draw_graph, "Graph spec or file")->required();
  draw->add_option("--set", draw_set, "Comma-separated vertices")->required();
  draw->add_option("-o,--output", draw_out, "Output .dot file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      const auto g = load_graph(gen_spec);
      const auto fmt = parse_format_name(gen_format);
      write_output(gen_out, fmt == GraphFormat::edge_list ? to_edge_list(g.graph) : to_graph6(g.graph) + "\n");
      return kExitOk;
    }

    if (*solve) {
      const auto g = load_graph(solve_graph);
      const auto oracle = oracle_for(g.graph);
      SolverConfig config;
      config.method = parse_method(solve_method);
      config.big_m = big_m;
      const BenchInstance* inst = known_instance(g.name);
      config.ga.population_size = np.value_or(inst ? inst->ga_population : config.ga.population_size);
      config.ga.max_iterations = maxit.value_or(inst ? inst->ga_iterations : config.ga.max_iterations);
      config.sa.max_iterations = maxit.value_or(inst ? inst->sa_iterations : config.sa.max_iterations);
      config.sa.initial_temperature = t0.value_or(config.sa.initial_temperature);
      config.sa.cooling_rate = rho.value_or(config.sa.cooling_rate);
      config.sa.cooling_time = cooling_time.value_or(0);
      config.sa.neighbor_count = neighbors.value_or(0);
      config.sa.acceptance = acceptance == "standard" ? Acceptance::standard : Acceptance::literal;
      config.bb.cover_bound = !no_cover;
      if (time_limit)
        config.bb.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(*time_limit * 1000.0));

      const bool stochastic = config.method == Method::ga || config.method == Method::sa;
      const std::size_t count = stochastic ? runs : 1;
      auto records = run_seeds(oracle, g.name, config, stochastic ? seed : 0, count, harness_threads(), !no_timing);
      for (const auto& r : records) {
        std::cout << g.name << " (n=" << r.n << "): " << method_name(r.method) << " size " << r.size;
        if (r.certified_optimal) std::cout << " [optimal]";
        if (stochastic) std::cout << " seed " << r.seed;
        std::cout << " witness " << format_members(r.witness) << " time " << r.wall_time_ms << " ms\n";
      }
      if (count > 1) std::cout << "best size " << best_of(records).size << " over " << count << " runs\n";
      if (!solve_json.empty()) write_output(solve_json, records_to_json(records));
      return kExitOk;
    }

    if (*lp) {
      const auto g = load_graph(lp_graph);
      write_output(lp_out, write_lp(build_ilp(oracle_for(g.graph))));
      return kExitOk;
    }

    if (*verify) {
      const auto g = load_graph(verify_graph);
      const auto oracle = oracle_for(g.graph);
      const VertexSet s = parse_set(verify_set, g.graph.order());
      const auto violations = find_violations(oracle, s);
      if (violations.empty()) {
        std::cout << "feasible: " << format_members(s.members()) << " is a general position set of size " << s.count()
                  << "\n";
        return kExitOk;
      }
      std::cout << "infeasible: " << violations.size() << " violating pair(s)\n";
      for (const auto& v : violations)
        std::cout << "  pair {" << v.u << "," << v.v << "} witness " << v.witness << "\n";
      return kExitInfeasible;
    }

    if (*table1) {
      if (!fullerenes.empty()) topts.fullerene_dir = fullerenes;
      topts.q7_exact = !skip_q7;
      topts.timing = !bench_no_timing;
      topts.threads = harness_threads();
      const auto report = run_table1(topts);
      std::cout << report.format();
      if (!bench_json.empty()) write_output(bench_json, records_to_json(report.records));
      return report.exact_values_match() ? kExitOk : kExitInfeasible;
    }

    if (*draw) {
      const auto g = load_graph(draw_graph);
      const VertexSet s = parse_set(draw_set, g.graph.order());
      write_output(draw_out, to_dot(g.graph, s, g.name));
      return kExitOk;
    }
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
