#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gpos/run_record.hpp"

namespace gpos {

/// A benchmark instance with its known optimum and solver settings.
struct BenchInstance {
  std::string name;
  std::string spec;  // graph spec string; empty for fullerenes (loaded from a data directory)
  std::size_t n;
  std::size_t expected_gp;
  std::size_t ga_population;
  std::uint64_t ga_iterations;
  std::uint64_t sa_iterations;
  double sa_temperature = 10.0;
};

/// The constructible instances (hypercubes Q3..Q7 and the three circulants).
const std::vector<BenchInstance>& table1_instances();
/// C46 and C48, which need adjacency files.
const std::vector<BenchInstance>& fullerene_instances();

struct Table1Options {
  std::size_t runs = 10;
  std::uint64_t first_seed = 1;
  std::optional<std::filesystem::path> fullerene_dir;
  /// Assert fullerene rows against the reference values (only meaningful when
  /// the files hold the reference isomers).
  bool fullerenes_are_reference_isomers = false;
  bool q7_exact = true;
  bool timing = true;
  std::size_t threads = 1;
  /// Restricts the run to instances with these names; empty runs everything.
  std::vector<std::string> only;
};

struct Table1Row {
  std::string name;
  std::size_t n = 0;
  std::size_t expected_gp = 0;
  bool skipped = false;
  std::string note;
  std::optional<std::size_t> exact;  // branch and bound
  std::size_t ga_best = 0;
  std::size_t sa_best = 0;
  bool asserted = true;  // whether a mismatch with expected_gp counts as a failure
};

struct Table1Report {
  std::vector<Table1Row> rows;
  std::vector<RunRecord> records;

  /// All asserted rows whose exact value (when computed) equals the expectation.
  bool exact_values_match() const;
  std::string format() const;
};

/// Throws InternalError when a heuristic beats the certified optimum.
Table1Report run_table1(const Table1Options& options);

/// Looks for <dir>/<name>.{txt,el,edges,g6,graph6}.
std::optional<std::filesystem::path> find_instance_file(const std::filesystem::path& dir, const std::string& name);

}  // namespace gpos
