#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "walkmine/error.hpp"
#include "walkmine/generator.hpp"
#include "walkmine/oracle.hpp"
#include "walkmine/pseudo_basis.hpp"
#include "walkmine/scp_miner.hpp"

namespace walkmine {
namespace {

using testing::load_fixture;

ColorProgram program(const DirectedGraph& g, const char* text) { return parse_color_program(g, text); }

std::vector<ColorProgram> programs_at(const std::vector<ScpReport>& reports, std::size_t length) {
  for (const auto& r : reports)
    if (r.length == length) return r.programs;
  return {};
}

TEST(Simulate, FixtureG1) {
  auto f = load_fixture("g1.json");
  const auto& g = f.graph;
  EXPECT_EQ(simulate_scp(g, f.source, program(g, "red·green")),
            (EndpointTrace{f.source, g.make_set({"a", "b"}), g.make_set({"t"})}));
  EXPECT_EQ(simulate_scp(g, f.source, {}), EndpointTrace{f.source});
  EXPECT_EQ(simulate_scp(g, f.source, program(g, "blue,green")),
            (EndpointTrace{f.source, g.empty_set(), g.empty_set()}));
  EXPECT_THROW(simulate_scp(g, g.empty_set(), {}), std::invalid_argument);
}

TEST(Classify, Verdicts) {
  auto f = load_fixture("g1.json");
  const auto& g = f.graph;
  auto exact = classify_scp(g, f.source, f.target, program(g, "red green"));
  EXPECT_EQ(exact.verdict, Verdict::exact);
  EXPECT_FALSE(exact.partially_halts());
  EXPECT_EQ(describe(exact), "Exact");

  auto halt = classify_scp(g, f.source, f.target, program(g, "blue green"));
  EXPECT_EQ(halt.verdict, Verdict::complete_halt);
  EXPECT_EQ(halt.halt_step, std::size_t{1});
  EXPECT_EQ(describe(halt).rfind("CompleteHalt(1)", 0), 0u);

  auto h = load_fixture("g2.json");
  auto partial = classify_scp(h.graph, h.source, h.target, program(h.graph, "red green yellow"));
  EXPECT_EQ(partial.verdict, Verdict::exact);
  EXPECT_EQ(partial.partial_halt_steps, std::vector<std::size_t>{2});
}

TEST(Classify, AgreesWithReferenceSimulation) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    auto inst = generate_instance(seed);
    SeededRng rng(seed * 31 + 1);
    for (int trial = 0; trial < 10; ++trial) {
      ColorProgram p(rng.below(5));
      for (auto& c : p) c = static_cast<ColorId>(rng.below(inst.graph.color_count()));
      auto fast = classify_scp(inst.graph, inst.source, inst.target, p);
      auto slow = reference_classify_scp(inst.graph, inst.source, inst.target, p);
      EXPECT_EQ(fast.verdict, slow.verdict);
      EXPECT_EQ(fast.halt_step, slow.halt_step);
      EXPECT_EQ(fast.partial_halt_steps, slow.partial_halt_steps);
    }
  }
}

TEST(Predicates, FixtureG1) {
  auto f = load_fixture("g1.json");
  const auto& g = f.graph;
  const auto a = g.make_set({"a"});
  EXPECT_TRUE(covers(g, a, f.target, *g.find_color("green")));
  EXPECT_TRUE(outspans(g, a, f.target, *g.find_color("blue")));
  EXPECT_FALSE(injects(g, f.target, f.target, *g.find_color("red")));
  EXPECT_TRUE(spans(g, a, f.target, *g.find_color("green")));
}

TEST(Predicates, InjectsIffNotOutspansWithNonemptyImage) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto inst = generate_instance(seed);
    const auto& g = inst.graph;
    SeededRng rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
      VertexSet a = g.empty_set(), b = g.empty_set();
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (rng.chance(0.3)) a.insert(v);
        if (rng.chance(0.4)) b.insert(v);
      }
      const auto c = static_cast<ColorId>(rng.below(g.color_count()));
      const bool nonempty = !color_image(g, a, c).empty();
      EXPECT_EQ(injects(g, a, b, c), !outspans(g, a, b, c) && nonempty);
      EXPECT_EQ(spans(g, a, b, c), covers(g, a, b, c) && !outspans(g, a, b, c));
    }
  }
}

TEST(ParseProgram, Forms) {
  auto f = load_fixture("g1.json");
  const auto& g = f.graph;
  EXPECT_EQ(program(g, "red·green"), program(g, "red, green"));
  EXPECT_TRUE(program(g, "ε").empty());
  EXPECT_TRUE(program(g, "").empty());
  EXPECT_EQ(format_program(g, program(g, "red green")), "red·green");
  EXPECT_THROW(program(g, "red purple"), InputError);
}

TEST(MinimalCovers, SmallExample) {
  // Vertices 0,1,2 with images {x}, {y}, {x,y} over x=3, y=4.
  VertexSet x(5), y(5), xy(5), b(5);
  x.insert(3);
  y.insert(4);
  xy.insert(3);
  xy.insert(4);
  b = xy;
  std::vector<CoverCandidate> candidates{{0, x}, {1, y}, {2, xy}};
  auto covers = enumerate_minimal_covers(5, candidates, b);
  ASSERT_EQ(covers.size(), 2u);
  EXPECT_EQ(covers[0].to_vector(), (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(covers[1].to_vector(), (std::vector<VertexId>{2}));

  EXPECT_EQ(enumerate_minimal_covers(5, candidates, VertexSet(5)), std::vector<VertexSet>{VertexSet(5)});
  VertexSet unreachable(5);
  unreachable.insert(0);
  EXPECT_TRUE(enumerate_minimal_covers(5, candidates, unreachable).empty());
}

TEST(MinimalCovers, MatchBruteForce) {
  SeededRng rng(99);
  for (int round = 0; round < 400; ++round) {
    const std::size_t universe = 4 + rng.below(14);
    const std::size_t pool_size = 1 + rng.below(std::min<std::size_t>(universe, 10));
    VertexSet pool(universe), b(universe);
    std::vector<VertexSet> images(universe, VertexSet(universe));
    std::vector<CoverCandidate> candidates;
    for (std::size_t i = 0; i < pool_size; ++i) pool.insert(static_cast<VertexId>(rng.below(universe)));
    for (VertexId v = 0; v < universe; ++v)
      if (rng.chance(0.3)) b.insert(v);
    for (auto v : pool) {
      for (VertexId w = 0; w < universe; ++w)
        if (rng.chance(0.35)) images[v].insert(w);
      candidates.push_back({v, images[v]});
    }
    const auto expected = minimal_covers_bruteforce(pool, images, b);
    const auto actual = enumerate_minimal_covers(universe, candidates, b);
    EXPECT_EQ(actual, expected) << "round " << round;
    for (const auto& cover : actual) {
      for (auto v : cover) {
        VertexSet covered(universe);
        for (auto w : cover)
          if (w != v) covered |= images[w];
        EXPECT_FALSE(b.is_subset_of(covered));
      }
    }
  }
}

TEST(PseudoBases, FixtureG1) {
  auto f = load_fixture("g1.json");
  const auto& g = f.graph;
  auto bases = enumerate_pseudo_bases(g, g.make_set({"a", "b"}), f.target, f.target, *g.find_color("green"));
  EXPECT_EQ(bases, (std::vector<VertexSet>{g.make_set({"a"}), g.make_set({"b"})}));
  EXPECT_TRUE(enumerate_pseudo_bases(g, g.make_set({"s1"}), f.target, f.target, *g.find_color("green")).empty());
}

TEST(MineScp, FixtureG1) {
  auto f = load_fixture("g1.json");
  const auto& g = f.graph;
  MiningConfig config;
  for (auto mode : {MiningMode::exact, MiningMode::feasible}) {
    auto reports = mine_scp(g, f.source, f.target, mode, config);
    ASSERT_EQ(reports.size(), 5u);
    for (const auto& r : reports) {
      EXPECT_TRUE(r.exhausted);
      EXPECT_EQ(r.programs, r.length == 2 ? std::vector<ColorProgram>{program(g, "red green")}
                                          : std::vector<ColorProgram>{});
    }
  }
}

TEST(MineScp, FixtureG2RepairedFindsPartiallyHaltingProgram) {
  auto f = load_fixture("g2.json");
  MiningConfig config;
  config.max_len = 3;
  auto reports = mine_exact_scp(f.graph, f.source, f.target, config);
  EXPECT_EQ(programs_at(reports, 3), std::vector<ColorProgram>{program(f.graph, "red green yellow")});
}

TEST(MineScp, FixtureG2LiteralMissesIt) {
  auto f = load_fixture("g2.json");
  MiningConfig config;
  config.max_len = 3;
  config.fidelity = Fidelity::literal;
  auto reports = mine_exact_scp(f.graph, f.source, f.target, config);
  EXPECT_TRUE(programs_at(reports, 3).empty());
}

TEST(MineScp, EmptyProgramAtLengthZero) {
  auto f = load_fixture("g1.json");
  MiningConfig config;
  config.max_len = 0;
  auto exact = mine_exact_scp(f.graph, f.source, f.source, config);
  EXPECT_EQ(exact.front().programs, std::vector<ColorProgram>{ColorProgram{}});
  auto feasible = mine_feasible_scp(f.graph, f.graph.make_set({"s1"}), f.source, config);
  EXPECT_EQ(feasible.front().programs, std::vector<ColorProgram>{ColorProgram{}});
  auto none = mine_exact_scp(f.graph, f.graph.make_set({"s1"}), f.source, config);
  EXPECT_TRUE(none.front().programs.empty());
}

TEST(MineScp, FeasibleWithFullTargetIsEveryNonHaltingProgram) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto inst = generate_instance(seed);
    MiningConfig config;
    config.max_len = 3;
    auto reports = mine_feasible_scp(inst.graph, inst.source, inst.graph.all_vertices(), config);
    for (const auto& r : reports) {
      auto oracle = brute_force_mine_scp(inst.graph, inst.source, inst.graph.all_vertices(), r.length);
      EXPECT_EQ(r.programs, oracle.feasible) << inst.summary;
      for (const auto& p : r.programs) EXPECT_FALSE(simulate_scp(inst.graph, inst.source, p).back().empty());
    }
  }
}

TEST(MineScp, MatchesOracleOnSmallCorpus) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto inst = generate_instance(seed);
    MiningConfig config;
    for (auto mode : {MiningMode::exact, MiningMode::feasible}) {
      auto reports = mine_scp(inst.graph, inst.source, inst.target, mode, config);
      ASSERT_EQ(reports.size(), 5u);
      for (const auto& r : reports) {
        auto oracle = brute_force_mine_scp(inst.graph, inst.source, inst.target, r.length);
        EXPECT_EQ(r.programs, mode == MiningMode::exact ? oracle.exact : oracle.feasible)
            << inst.summary << " length " << r.length << " mode " << to_string(mode);
      }
    }
  }
}

TEST(MineScp, ResourceCapsReportedInBand) {
  auto inst = generate_instance(3);
  MiningConfig config;
  config.max_triples = 1;
  auto reports = mine_feasible_scp(inst.graph, inst.source, inst.graph.all_vertices(), config);
  EXPECT_FALSE(reports.back().exhausted);
}

TEST(MineScp, Deterministic) {
  auto inst = generate_instance(17);
  MiningConfig config;
  auto a = mine_feasible_scp(inst.graph, inst.source, inst.target, config);
  auto b = mine_feasible_scp(inst.graph, inst.source, inst.target, config);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].programs, b[i].programs);
}

TEST(MineScp, RejectsEmptyEndpoints) {
  auto f = load_fixture("g1.json");
  EXPECT_THROW(mine_exact_scp(f.graph, f.graph.empty_set(), f.target, {}), std::invalid_argument);
}

}  // namespace
}  // namespace walkmine
