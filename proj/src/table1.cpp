#include "gpos/table1.hpp"

#include <algorithm>
#include <cstdio>

#include "gpos/distance_matrix.hpp"
#include "gpos/graph_spec.hpp"

namespace gpos {

const std::vector<BenchInstance>& table1_instances() {
  static const std::vector<BenchInstance> rows = {
      {"Q3", "q3", 8, 4, 10, 100, 10},
      {"Q4", "q4", 16, 5, 20, 200, 10},
      {"Q5", "q5", 32, 6, 20, 400, 50},
      {"Q6", "q6", 64, 8, 50, 4500, 500},
      {"Q7", "q7", 128, 9, 50, 8000, 100},
      {"Cay(Z9,{1,3,6,8})", "cay:9:1,3,6,8", 9, 4, 10, 50, 10},
      {"Cay(Z9,{1,2,3,6,7,8})", "cay:9:1,2,3,6,7,8", 9, 4, 10, 50, 10},
      {"Cay(Z20,{1,3,17,19})", "cay:20:1,3,17,19", 20, 7, 20, 250, 50},
  };
  return rows;
}

const std::vector<BenchInstance>& fullerene_instances() {
  static const std::vector<BenchInstance> rows = {
      {"C46", "", 46, 8, 50, 5000, 500},
      {"C48", "", 48, 8, 50, 5000, 500},
  };
  return rows;
}

std::optional<std::filesystem::path> find_instance_file(const std::filesystem::path& dir, const std::string& name) {
  for (const char* ext : {".txt", ".el", ".edges", ".g6", ".graph6"}) {
    auto p = dir / (name + ext);
    if (std::filesystem::is_regular_file(p)) return p;
  }
  return std::nullopt;
}

bool Table1Report::exact_values_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const Table1Row& r) {
    return r.skipped || !r.asserted || !r.exact || *r.exact == r.expected_gp;
  });
}

std::string Table1Report::format() const {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %5s %8s %6s %6s %6s  %s\n", "graph", "n", "expected", "BB", "GA", "SA",
                "status");
  out += line;
  for (const auto& r : rows) {
    if (r.skipped) {
      std::snprintf(line, sizeof line, "%-24s %5zu %8zu %6s %6s %6s  %s\n", r.name.c_str(), r.n, r.expected_gp, "-",
                    "-", "-", r.note.c_str());
      out += line;
      continue;
    }
    const std::string bb = r.exact ? std::to_string(*r.exact) : "-";
    std::string status;
    if (!r.asserted) {
      status = "reported only";
    } else if (r.exact && *r.exact != r.expected_gp) {
      status = "EXACT MISMATCH";
    } else {
      status = (r.ga_best == r.expected_gp ? "GA ok" : "GA below");
      status += (r.sa_best == r.expected_gp ? ", SA ok" : ", SA below");
    }
    if (!r.note.empty()) status += " (" + r.note + ")";
    std::snprintf(line, sizeof line, "%-24s %5zu %8zu %6s %6zu %6zu  %s\n", r.name.c_str(), r.n, r.expected_gp,
                  bb.c_str(), r.ga_best, r.sa_best, status.c_str());
    out += line;
  }
  return out;
}

namespace {

void run_instance(const BenchInstance& inst, const Graph& g, const Table1Options& options, Table1Row& row,
                  std::vector<RunRecord>& records) {
  const auto oracle = IntervalOracle::build(g, all_pairs_distances(g));
  row.n = g.order();

  const bool exact = options.q7_exact || inst.name != "Q7";
  if (exact) {
    SolverConfig bb;
    bb.method = Method::bb;
    auto rec = run_solver(oracle, inst.name, bb, 0, options.timing);
    row.exact = rec.size;
    records.push_back(std::move(rec));
  } else {
    row.note = "exact search skipped";
  }

  SolverConfig ga;
  ga.method = Method::ga;
  ga.ga.population_size = inst.ga_population;
  ga.ga.max_iterations = inst.ga_iterations;
  auto ga_runs = run_seeds(oracle, inst.name, ga, options.first_seed, options.runs, options.threads, options.timing);
  row.ga_best = best_of(ga_runs).size;

  SolverConfig sa;
  sa.method = Method::sa;
  sa.sa.max_iterations = inst.sa_iterations;
  sa.sa.initial_temperature = inst.sa_temperature;
  auto sa_runs = run_seeds(oracle, inst.name, sa, options.first_seed, options.runs, options.threads, options.timing);
  row.sa_best = best_of(sa_runs).size;

  if (row.exact && (row.ga_best > *row.exact || row.sa_best > *row.exact))
    throw InternalError("heuristic result exceeds the certified optimum on " + inst.name);

  records.insert(records.end(), std::make_move_iterator(ga_runs.begin()), std::make_move_iterator(ga_runs.end()));
  records.insert(records.end(), std::make_move_iterator(sa_runs.begin()), std::make_move_iterator(sa_runs.end()));
}

bool selected(const Table1Options& options, const std::string& name) {
  return options.only.empty() || std::find(options.only.begin(), options.only.end(), name) != options.only.end();
}

}  // namespace

Table1Report run_table1(const Table1Options& options) {
  if (options.runs < 1) throw std::invalid_argument("bench needs at least one run per method");
  Table1Report report;

  for (const auto& inst : fullerene_instances()) {
    if (!selected(options, inst.name)) continue;
    Table1Row row;
    row.name = inst.name;
    row.n = inst.n;
    row.expected_gp = inst.expected_gp;
    row.asserted = options.fullerenes_are_reference_isomers;
    std::optional<std::filesystem::path> file;
    if (options.fullerene_dir) file = find_instance_file(*options.fullerene_dir, inst.name);
    if (!file) {
      row.skipped = true;
      row.note = "skipped (no data)";
      report.rows.push_back(row);
      continue;
    }
    const Graph g = make_graph(parse_graph_spec("file:" + file->string()));
    run_instance(inst, g, options, row, report.records);
    report.rows.push_back(row);
  }

  for (const auto& inst : table1_instances()) {
    if (!selected(options, inst.name)) continue;
    Table1Row row;
    row.name = inst.name;
    row.n = inst.n;
    row.expected_gp = inst.expected_gp;
    run_instance(inst, make_graph(parse_graph_spec(inst.spec)), options, row, report.records);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace gpos
