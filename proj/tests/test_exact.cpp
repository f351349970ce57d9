#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "gpos/distance_matrix.hpp"
#include "gpos/exact.hpp"
#include "gpos/generators.hpp"
#include "gpos/ilp.hpp"
#include "support/oracles.hpp"

using namespace gpos;

namespace {

IntervalOracle oracle_of(const Graph& g) { return IntervalOracle::build(g, all_pairs_distances(g)); }

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(GPOS_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_gp(oracle_of(complete(5))).gp, 5u);
  EXPECT_EQ(brute_force_gp(oracle_of(hypercube(3))).gp, 4u);
  // P4: frozen from exhaustive subset enumeration.
  ASSERT_EQ(ref::gp_by_subset_enumeration(path(4)), 2u);
  EXPECT_EQ(brute_force_gp(oracle_of(path(4))).gp, 2u);
}

TEST(BruteForce, GuardLimit) {
  EXPECT_THROW(brute_force_gp(oracle_of(path(kBruteForceLimit + 1))), std::invalid_argument);
  EXPECT_NO_THROW(brute_force_gp(oracle_of(cycle(kBruteForceLimit))));
}

TEST(BruteForce, WitnessIsLexSmallestMaximumSet) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = ref::random_connected_graph(rng, 2 + trial % 8, 0.3);
    const auto o = oracle_of(g);
    const auto res = brute_force_gp(o);
    ASSERT_TRUE(is_general_position(o, res.witness));
    ASSERT_EQ(res.witness.count(), res.gp);
    const std::size_t n = g.order();
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      VertexSet s(n);
      for (Vertex v = 0; v < n; ++v)
        if ((mask >> v) & 1) s.insert(v);
      if (s.count() == res.gp && is_general_position(o, s)) EXPECT_FALSE(s.lex_less(res.witness));
    }
  }
  EXPECT_EQ(brute_force_gp(oracle_of(path(4))).witness.to_string(), "0011");
}

TEST(BranchAndBound, TableValues) {
  EXPECT_EQ(branch_and_bound_gp(oracle_of(hypercube(3))).gp, 4u);
  EXPECT_EQ(branch_and_bound_gp(oracle_of(hypercube(4))).gp, 5u);
  EXPECT_EQ(branch_and_bound_gp(oracle_of(hypercube(5))).gp, 6u);
}

TEST(BranchAndBound, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> size(2, 10);
    std::uniform_real_distribution<double> density(0.0, 0.6);
    const auto g = ref::random_connected_graph(rng, size(rng), density(rng));
    const auto o = oracle_of(g);
    const auto bf = brute_force_gp(o);
    for (bool cover : {true, false}) {
      BranchAndBoundOptions opts;
      opts.cover_bound = cover;
      const auto bb = branch_and_bound_gp(o, opts);
      EXPECT_TRUE(bb.optimal);
      EXPECT_EQ(bb.gp, bf.gp) << "trial " << trial;
      EXPECT_EQ(bb.witness.count(), bb.gp);
      EXPECT_TRUE(is_general_position(o, bb.witness));
    }
  }
}

TEST(BranchAndBound, CoverBoundDoesNotChangeLargerOptima) {
  for (unsigned d : {5u, 6u}) {
    const auto o = oracle_of(hypercube(d));
    BranchAndBoundOptions plain;
    plain.cover_bound = false;
    const auto a = branch_and_bound_gp(o);
    const auto b = branch_and_bound_gp(o, plain);
    EXPECT_EQ(a.gp, b.gp);
    EXPECT_LE(a.nodes_explored, b.nodes_explored);
  }
}

TEST(BranchAndBound, IncumbentsIncreaseAndVerify) {
  const auto o = oracle_of(hypercube(6));
  const auto res = branch_and_bound_gp(o);
  ASSERT_FALSE(res.incumbents.empty());
  for (std::size_t i = 0; i < res.incumbents.size(); ++i) {
    EXPECT_TRUE(is_general_position(o, res.incumbents[i].witness));
    EXPECT_EQ(res.incumbents[i].witness.count(), res.incumbents[i].size);
    if (i > 0) EXPECT_GT(res.incumbents[i].size, res.incumbents[i - 1].size);
  }
  EXPECT_EQ(res.incumbents.back().witness, res.witness);
}

TEST(BranchAndBound, CancellationReturnsFlaggedLowerBound) {
  const auto o = oracle_of(hypercube(7));
  std::atomic<bool> cancel{true};
  BranchAndBoundOptions opts;
  opts.cancel = &cancel;
  const auto res = branch_and_bound_gp(o, opts);
  EXPECT_FALSE(res.optimal);
  EXPECT_TRUE(is_general_position(o, res.witness));

  BranchAndBoundOptions timed;
  timed.time_limit = std::chrono::milliseconds(0);
  const auto t = branch_and_bound_gp(o, timed);
  EXPECT_FALSE(t.optimal);
  EXPECT_TRUE(is_general_position(o, t.witness));
  EXPECT_LE(t.gp, 9u);
}

TEST(ExactInvariants, LowerBoundsAndCompleteGraphs) {
  for (std::size_t n = 1; n <= 9; ++n) EXPECT_EQ(branch_and_bound_gp(oracle_of(complete(n))).gp, n);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = ref::random_connected_graph(rng, 2 + trial % 15, 0.1);
    EXPECT_GE(branch_and_bound_gp(oracle_of(g)).gp, 2u);
  }
  EXPECT_EQ(branch_and_bound_gp(oracle_of(path(1))).gp, 1u);
}

TEST(Ilp, CompleteGraphHasNoConstraints) {
  const auto m = build_ilp(oracle_of(complete(6)));
  EXPECT_TRUE(m.constraints.empty());
  EXPECT_EQ(m.big_m, 6);
  EXPECT_EQ(ref::ilp_optimum_exhaustive(m), 6u);
}

TEST(Ilp, CycleC4Rows) {
  const auto m = build_ilp(oracle_of(cycle(4)));
  ASSERT_EQ(m.constraints.size(), 2u);
  EXPECT_EQ(m.constraints[0].u, 0u);
  EXPECT_EQ(m.constraints[0].v, 2u);
  EXPECT_EQ(m.constraints[0].interval, (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(m.constraints[1].u, 1u);
  EXPECT_EQ(m.constraints[1].v, 3u);
  EXPECT_EQ(m.constraints[1].interval, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(m.rhs(), 8);
}

TEST(Ilp, PathP3Row) {
  const auto m = build_ilp(oracle_of(path(3)));
  ASSERT_EQ(m.constraints.size(), 1u);
  EXPECT_EQ(m.constraints[0].interval, (std::vector<Vertex>{1}));
  EXPECT_EQ(m.big_m, 3);
  EXPECT_EQ(m.rhs(), 6);
  const std::uint8_t all[] = {1, 1, 1}, ends[] = {1, 0, 1}, two[] = {1, 1, 0};
  EXPECT_FALSE(m.satisfied(all));
  EXPECT_TRUE(m.satisfied(ends));
  EXPECT_TRUE(m.satisfied(two));
}

TEST(Ilp, BigMRowIsVacuousUnlessBothEndpointsChosen) {
  const auto o = oracle_of(hypercube(3));
  const auto m = build_ilp(o);
  for (const auto& c : m.constraints) {
    std::vector<std::uint8_t> x(m.n, 1);
    x[c.u] = 0;
    EXPECT_LE(m.row_activity(c, x), m.rhs());
    x[c.u] = 1;
    EXPECT_GT(m.row_activity(c, x), m.rhs());
  }
}

TEST(Ilp, OptimumEqualsBruteForceAndRemovingRowsOnlyHelps) {
  std::mt19937_64 rng(8);
  for (const auto& g : ref::oracle_corpus()) {
    if (g.order() > 10) continue;
    const auto o = oracle_of(g);
    auto m = build_ilp(o);
    const std::size_t opt = ref::ilp_optimum_exhaustive(m);
    EXPECT_EQ(opt, brute_force_gp(o).gp);
    if (!m.constraints.empty()) {
      m.constraints.erase(m.constraints.begin() + static_cast<long>(rng() % m.constraints.size()));
      EXPECT_GE(ref::ilp_optimum_exhaustive(m), opt);
    }
  }
}

TEST(WriteLp, GoldenFiles) {
  EXPECT_EQ(write_lp(build_ilp(oracle_of(path(3)))), read_golden("p3.lp"));
  EXPECT_EQ(write_lp(build_ilp(oracle_of(cycle(4)))), read_golden("c4.lp"));
  EXPECT_EQ(write_lp(build_ilp(oracle_of(hypercube(3)))), read_golden("q3.lp"));
  EXPECT_NE(read_golden("p3.lp").find("\ngp_0_2: x1 + 3 x0 + 3 x2 <= 6\n"), std::string::npos);
}

TEST(WriteLp, EmptyConstraintSectionAndDeterminism) {
  const auto text = write_lp(build_ilp(oracle_of(complete(3))));
  EXPECT_NE(text.find("Subject To\nBinary\nx0\nx1\nx2\nEnd\n"), std::string::npos);
  const auto m = build_ilp(oracle_of(hypercube(5)));
  EXPECT_EQ(write_lp(m), write_lp(m));
}

TEST(WriteLp, LongRowsAreWrapped) {
  const auto text = write_lp(build_ilp(oracle_of(hypercube(7))));
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) EXPECT_LE(line.size(), 256u);
}
