// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// criteria pass. Informational lines start with "  ".

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/support.hpp"
#include "walkmine/criterion.hpp"
#include "walkmine/generator.hpp"
#include "walkmine/oracle.hpp"
#include "walkmine/scp_miner.hpp"
#include "walkmine/stp_miner.hpp"

namespace walkmine {
namespace {

// Pinned sizes and tolerances.
constexpr std::uint64_t kCorpusSeed = 1;
constexpr std::size_t kCorpusSize = 200;
constexpr std::size_t kCorpusMaxLen = 4;
constexpr std::size_t kSoundnessRuns = 1000;
constexpr std::size_t kReductionMaxVertices = 10;
constexpr std::size_t kReductionSamplesPerGraph = 25;
constexpr std::size_t kSeparableTriples = 500;
constexpr std::size_t kCollidingTriples = 100;
constexpr std::size_t kDegeneracyGraphs = 50;
constexpr std::size_t kDegeneracyMaxLen = 3;
constexpr std::size_t kScalingVertices = 20'000;
constexpr std::size_t kScalingEdges = 100'000;
constexpr std::size_t kScalingColors = 4;
constexpr double kScalingBudgetSeconds = 1.0;
constexpr double kScalingFactor = 2.0;
constexpr int kScalingRepeats = 7;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

const std::vector<Instance>& corpus() {
  static const std::vector<Instance> instances = [] {
    std::vector<Instance> out;
    for (std::uint64_t i = 0; i < kCorpusSize; ++i) out.push_back(generate_instance(kCorpusSeed + i));
    return out;
  }();
  return instances;
}

std::string render(const DirectedGraph& g, const ColorProgram& p) { return format_program(g, p); }

// Adjacency rebuilt from the edge list so the checks below do not reuse the
// graph's own neighbourhood code.
struct Adjacency {
  std::vector<std::vector<VertexId>> out;
  std::vector<std::vector<VertexId>> in;
  std::set<Edge> edges;

  explicit Adjacency(const DirectedGraph& g) : out(g.vertex_count()), in(g.vertex_count()) {
    for (const auto& [u, v] : g.edges()) {
      out[u].push_back(v);
      in[v].push_back(u);
      edges.emplace(u, v);
    }
  }

  std::set<VertexId> color_image(const DirectedGraph& g, const std::set<VertexId>& a, ColorId c) const {
    std::set<VertexId> img;
    for (auto u : a)
      for (auto v : out[u])
        if (g.color(v) == c) img.insert(v);
    return img;
  }
};

std::set<VertexId> as_set(const VertexSet& s) {
  auto v = s.to_vector();
  return {v.begin(), v.end()};
}

bool subset(const std::set<VertexId>& a, const std::set<VertexId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// 1, 2: miner output equals the brute-force oracle.

Outcome oracle_equivalence(MiningMode mode) {
  const auto start = Clock::now();
  std::size_t compared = 0, mismatches = 0, skipped = 0, programs = 0;
  std::string first_bad;
  MiningConfig config;
  config.max_len = kCorpusMaxLen;
  for (const auto& inst : corpus()) {
    const auto& g = inst.graph;
    for (const auto& report : mine_scp(g, inst.source, inst.target, mode, config)) {
      if (!report.exhausted) {
        ++skipped;
        continue;
      }
      auto sets = brute_force_mine_scp(g, inst.source, inst.target, report.length);
      const auto& expected = mode == MiningMode::exact ? sets.exact : sets.feasible;
      ++compared;
      programs += expected.size();
      if (report.programs != expected) {
        ++mismatches;
        if (first_bad.empty()) first_bad = fmt("%s l=%zu", inst.summary.c_str(), report.length);
      }
    }
  }
  Outcome o;
  o.pass = mismatches == 0 && compared == kCorpusSize * (kCorpusMaxLen + 1);
  o.detail = fmt("%zu graphs, %zu (graph, length) pairs, %zu oracle programs, %zu mismatches, %zu skipped, %.2f s",
                 kCorpusSize, compared, programs, mismatches, skipped, seconds_since(start));
  if (!first_bad.empty()) o.notes.push_back("first mismatch: " + first_bad);
  return o;
}

// ---------------------------------------------------------------------------
// 3: every emitted program re-classifies under the reference simulation.

Outcome soundness() {
  const auto start = Clock::now();
  std::size_t runs = 0, emitted = 0, unsound = 0, capped = 0;
  std::size_t literal_runs = 0, literal_emitted = 0, literal_unsound = 0;
  std::string first_bad;
  SeededRng rng(0x5eed);
  for (std::size_t i = 0; i < kSoundnessRuns; ++i) {
    GeneratorOptions gen;
    gen.color_only = rng.chance(0.3);
    gen.max_vertices = static_cast<std::size_t>(rng.between(5, 12));
    const auto inst = generate_instance(10'000 + i, gen);
    const auto& g = inst.graph;
    const bool use_stp = i % 2 == 1;
    const auto mode = rng.chance(0.5) ? MiningMode::exact : MiningMode::feasible;
    MiningConfig config;
    config.max_len = static_cast<std::size_t>(rng.between(1, use_stp ? 3 : 4));
    if (rng.chance(0.2)) config.max_triples = static_cast<std::size_t>(rng.between(1, 50));
    if (rng.chance(0.1)) config.max_programs = static_cast<std::size_t>(rng.between(1, 5));
    config.stp_safe_sets = rng.chance(0.5);
    auto check = [&](const Classification& c) {
      return mode == MiningMode::exact ? c.is_exact() : c.is_feasible();
    };
    ++runs;
    if (use_stp) {
      for (const auto& r : mine_stp(g, inst.source, inst.target, mode, config)) {
        capped += r.exhausted ? 0 : 1;
        for (const auto& p : r.programs) {
          ++emitted;
          if (!check(reference_classify_stp(g, inst.source, inst.target, p))) {
            ++unsound;
            if (first_bad.empty()) first_bad = inst.summary + " stp " + describe(g.schema(), p);
          }
        }
      }
    } else {
      for (const auto& r : mine_scp(g, inst.source, inst.target, mode, config)) {
        capped += r.exhausted ? 0 : 1;
        for (const auto& p : r.programs) {
          ++emitted;
          if (!check(reference_classify_scp(g, inst.source, inst.target, p))) {
            ++unsound;
            if (first_bad.empty()) first_bad = inst.summary + " scp " + render(g, p);
          }
        }
      }
    }
    if (!use_stp && i % 4 == 0) {
      config.fidelity = Fidelity::literal;
      ++literal_runs;
      for (const auto& r : mine_scp(g, inst.source, inst.target, mode, config)) {
        for (const auto& p : r.programs) {
          ++literal_emitted;
          if (!check(reference_classify_scp(g, inst.source, inst.target, p))) ++literal_unsound;
        }
      }
    }
  }
  Outcome o;
  o.pass = unsound == 0 && runs >= kSoundnessRuns;
  o.detail = fmt("%zu runs (scp and stp alternating), %zu programs emitted, %zu unsound, %zu capped levels, %.2f s", runs,
                 emitted, unsound, capped, seconds_since(start));
  o.notes.push_back(fmt("literal-fidelity scp (not bound): %zu runs, %zu programs, %zu unsound", literal_runs,
                        literal_emitted, literal_unsound));
  if (!first_bad.empty()) o.notes.push_back("first unsound: " + first_bad);
  return o;
}

// ---------------------------------------------------------------------------
// 4: G2 regression.

Outcome g2_regression() {
  const auto f = testing::load_fixture("g2.json");
  const auto& g = f.graph;
  const auto wanted = parse_color_program(g, "red,green,yellow");
  MiningConfig config;
  config.max_len = 3;
  const auto repaired = mine_exact_scp(g, f.source, f.target, config);
  config.fidelity = Fidelity::literal;
  const auto literal = mine_exact_scp(g, f.source, f.target, config);
  auto at3 = [&](const std::vector<ScpReport>& rs) {
    std::string out;
    for (const auto& p : rs.at(3).programs) out += (out.empty() ? "" : ", ") + render(g, p);
    return out.empty() ? std::string("none") : out;
  };
  const auto& found = repaired.at(3).programs;
  Outcome o;
  o.pass = repaired.at(3).exhausted && found == std::vector<ColorProgram>{wanted} &&
           classify_scp(g, f.source, f.target, wanted).is_exact();
  o.detail = "repaired l=3: " + at3(repaired) + "; literal l=3: " + at3(literal);
  const bool literal_found = std::find(literal.at(3).programs.begin(), literal.at(3).programs.end(), wanted) !=
                             literal.at(3).programs.end();
  o.notes.push_back(std::string("literal fidelity ") + (literal_found ? "finds" : "misses") + " red·green·yellow");
  return o;
}

// ---------------------------------------------------------------------------
// 5: structural properties of mined programs on the corpus.

struct PropertyCounts {
  std::size_t checked = 0;
  std::size_t counterexamples = 0;
  std::string first;
  void fail(const std::string& what) {
    ++counterexamples;
    if (first.empty()) first = what;
  }
};

bool has_successor_of_color(const DirectedGraph& g, const Adjacency& adj, VertexId v, ColorId c) {
  return std::any_of(adj.out[v].begin(), adj.out[v].end(), [&](VertexId w) { return g.color(w) == c; });
}

// Vertices with a walk of exactly k steps into T.
std::set<VertexId> can_reach_in(const Adjacency& adj, std::set<VertexId> t, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    std::set<VertexId> prev;
    for (auto v : t)
      for (auto u : adj.in[v]) prev.insert(u);
    t = std::move(prev);
  }
  return t;
}

Outcome structural_properties() {
  const auto start = Clock::now();
  PropertyCounts reach, witness, no_leak, no_leak_total, red;
  MiningConfig config;
  config.max_len = kCorpusMaxLen;
  SeededRng rng(0x1e44a);
  for (const auto& inst : corpus()) {
    const auto& g = inst.graph;
    const Adjacency adj(g);
    const auto t = as_set(inst.target);
    std::vector<ColorProgram> feasible, exact;
    for (const auto& r : mine_feasible_scp(g, inst.source, inst.target, config))
      feasible.insert(feasible.end(), r.programs.begin(), r.programs.end());
    for (const auto& r : mine_exact_scp(g, inst.source, inst.target, config))
      exact.insert(exact.end(), r.programs.begin(), r.programs.end());

    for (const auto& p : feasible) {
      const auto trace = simulate_scp(g, inst.source, p);
      const auto n = p.size();
      const auto cls = classify_scp(g, inst.source, inst.target, p);
      if (!cls.partially_halts()) {
        for (std::size_t i = 0; i < n; ++i) {
          ++reach.checked;
          const auto step = adj.color_image(g, as_set(trace[i]), p[i]);
          if (step.empty() || !subset(step, can_reach_in(adj, t, n - i - 1)))
            reach.fail(inst.summary + " " + render(g, p) + fmt(" i=%zu", i));
        }
      }
      ++witness.checked;
      const auto walk = extract_walk(g, inst.source, inst.target, p);
      bool ok = walk && walk->vertices.size() == n + 1 && inst.source.contains(walk->vertices.front()) &&
                t.contains(walk->vertices.back());
      for (std::size_t i = 0; ok && i < n; ++i) {
        ok = adj.edges.contains({walk->vertices[i], walk->vertices[i + 1]}) && g.color(walk->vertices[i + 1]) == p[i];
      }
      if (!ok) witness.fail(inst.summary + " " + render(g, p));
    }

    for (const auto& p : exact) {
      const auto trace = simulate_scp(g, inst.source, p);
      const bool halts = classify_scp(g, inst.source, inst.target, p).partially_halts();
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const auto c = p[i], d = p[i + 1];
        const auto e_pi = as_set(trace[i]);
        const auto e_pic = as_set(trace[i + 1]);
        const auto image = adj.color_image(g, e_pi, c);
        const bool spans_ok = image == e_pic;
        std::set<VertexId> parents;
        for (auto v : trace[i + 2])
          for (auto u : adj.in[v])
            if (g.color(u) == c) parents.insert(u);
        const bool no_outspan = subset(image, parents);
        const bool holds = spans_ok && no_outspan;
        ++no_leak_total.checked;
        if (!holds) no_leak_total.fail(inst.summary + " " + render(g, p) + fmt(" split=%zu", i));
        if (!halts) {
          ++no_leak.checked;
          if (!holds) no_leak.fail(inst.summary + " " + render(g, p));
        }
        (void)d;
      }
    }

    if (g.vertex_count() <= kReductionMaxVertices && g.has_color()) {
      const auto n = g.vertex_count();
      for (std::size_t k = 0; k < kReductionSamplesPerGraph; ++k) {
        const auto c = static_cast<ColorId>(rng.below(g.color_count()));
        std::set<VertexId> a;
        for (VertexId v = 0; v < n; ++v)
          if (rng.chance(0.4)) a.insert(v);
        const auto img = adj.color_image(g, a, c);
        std::set<VertexId> b;
        for (auto v : img)
          if (rng.chance(0.8)) b.insert(v);
        if (rng.chance(0.3)) b.insert(static_cast<VertexId>(rng.below(n)));
        const VertexSet av(n, std::vector<VertexId>(a.begin(), a.end()));
        const VertexSet bv(n, std::vector<VertexId>(b.begin(), b.end()));
        const bool lhs = spans(g, av, bv, c);
        // Some subset of A whose c-image is exactly B.
        const std::vector<VertexId> members(a.begin(), a.end());
        bool has_basis = false;
        for (std::uint32_t mask = 0; !has_basis && mask < (1U << members.size()); ++mask) {
          std::set<VertexId> sub;
          for (std::size_t j = 0; j < members.size(); ++j)
            if (mask >> j & 1U) sub.insert(members[j]);
          has_basis = adj.color_image(g, sub, c) == b;
        }
        const bool rhs = has_basis && subset(img, b);
        ++red.checked;
        if (lhs != rhs) red.fail(inst.summary + fmt(" c=%u", c));
      }
    }
  }
  Outcome o;
  o.pass = reach.counterexamples == 0 && witness.counterexamples == 0 && no_leak_total.counterexamples == 0 &&
           red.counterexamples == 0;
  o.detail = fmt("reach %zu/%zu, witness-walk %zu/%zu, no-leak %zu/%zu, span-reduction %zu/%zu counterexamples/checks, %.2f s",
                 reach.counterexamples, reach.checked, witness.counterexamples, witness.checked, no_leak_total.counterexamples,
                 no_leak_total.checked, red.counterexamples, red.checked, seconds_since(start));
  o.notes.push_back(fmt("no-leak restricted to exact programs without partial halting: %zu/%zu", no_leak.counterexamples,
                        no_leak.checked));
  for (const auto* c : {&reach, &witness, &no_leak_total, &red})
    if (!c->first.empty()) o.notes.push_back("first counterexample: " + c->first);
  return o;
}

// ---------------------------------------------------------------------------
// 6: compute_criterion separates or reports a collision.

struct CriterionCase {
  FeatureSchema schema;
  std::vector<FeatureVector> b, m, e;
};

FeatureVector random_vector(const FeatureSchema& schema, SeededRng& rng) {
  FeatureVector x;
  for (std::size_t d = 0; d < schema.size(); ++d) {
    if (rng.chance(0.1)) {
      x.push_back(FeatureValue::missing());
    } else if (schema.dimension(d).kind == FeatureKind::categorical) {
      x.push_back(FeatureValue::category(static_cast<CategoryId>(rng.below(schema.category_count(d)))));
    } else {
      x.push_back(FeatureValue::number(static_cast<double>(rng.below(6)) - 1.5));
    }
  }
  return x;
}

CriterionCase random_case(SeededRng& rng, bool colliding) {
  CriterionCase c;
  const auto dims = rng.between(1, 3);
  for (std::uint64_t d = 0; d < dims; ++d) {
    if (rng.chance(0.5)) {
      const auto dim = c.schema.add_dimension("c" + std::to_string(d), FeatureKind::categorical);
      const auto cats = rng.between(1, 4);
      for (std::uint64_t k = 0; k < cats; ++k) c.schema.intern(dim, "v" + std::to_string(k));
    } else {
      c.schema.add_dimension("x" + std::to_string(d), FeatureKind::ordered);
    }
  }
  const auto nb = rng.between(1, 6), ne = rng.between(colliding ? 1 : 0, 6), nm = rng.below(4);
  for (std::uint64_t i = 0; i < nb; ++i) c.b.push_back(random_vector(c.schema, rng));
  for (std::uint64_t i = 0; i < nm; ++i) c.m.push_back(random_vector(c.schema, rng));
  for (std::uint64_t tries = 0; c.e.size() < ne && tries < 200; ++tries) {
    auto x = random_vector(c.schema, rng);
    if (std::find(c.b.begin(), c.b.end(), x) == c.b.end()) c.e.push_back(std::move(x));
  }
  if (colliding) {
    const auto& shared = c.b[rng.below(c.b.size())];
    c.e.insert(c.e.begin() + static_cast<std::ptrdiff_t>(rng.below(c.e.size() + 1)), shared);
  }
  return c;
}

Outcome criterion_contract() {
  SeededRng rng(0xc417);
  std::size_t separable = 0, separated = 0, colliding = 0, reported = 0;
  std::string first_bad;
  while (separable < kSeparableTriples) {
    auto c = random_case(rng, false);
    ++separable;
    const auto r = compute_criterion(c.schema, c.b, c.m, c.e);
    bool ok = std::holds_alternative<Criterion>(r);
    if (ok) {
      const auto& crit = std::get<Criterion>(r);
      for (const auto& x : c.b) ok = ok && reference_satisfies(c.schema, x, crit);
      for (const auto& x : c.e) ok = ok && !reference_satisfies(c.schema, x, crit);
    }
    separated += ok ? 1 : 0;
    if (!ok && first_bad.empty()) first_bad = fmt("separable case %zu", separable);
  }
  while (colliding < kCollidingTriples) {
    auto c = random_case(rng, true);
    ++colliding;
    const auto r = compute_criterion(c.schema, c.b, c.m, c.e);
    const auto* w = std::get_if<Inseparable>(&r);
    const bool ok = w && w->b_index < c.b.size() && w->e_index < c.e.size() && c.b[w->b_index] == c.e[w->e_index];
    reported += ok ? 1 : 0;
    if (!ok && first_bad.empty()) first_bad = fmt("colliding case %zu", colliding);
  }
  Outcome o;
  o.pass = separated == separable && reported == colliding;
  o.detail = fmt("separable %zu/%zu perfectly separated, colliding %zu/%zu reported with a valid witness", separated,
                 separable, reported, colliding);
  if (!first_bad.empty()) o.notes.push_back("first failure: " + first_bad);
  return o;
}

// ---------------------------------------------------------------------------
// 7: on colour-only graphs both engines reach the same endpoint traces.

Outcome cross_engine() {
  const auto start = Clock::now();
  std::size_t graphs = 0, agree = 0, scp_covered = 0, levels = 0;
  std::size_t stp_only_traces = 0, scp_only_traces = 0;
  std::string first_bad;
  MiningConfig config;
  config.max_len = kDegeneracyMaxLen;
  GeneratorOptions gen;
  gen.color_only = true;
  for (std::uint64_t seed = 50'000; graphs < kDegeneracyGraphs; ++seed) {
    const auto inst = generate_instance(seed, gen);
    const auto& g = inst.graph;
    ++graphs;
    const auto scp = mine_exact_scp(g, inst.source, inst.target, config);
    const auto stp = mine_exact_stp(g, inst.source, inst.target, config);
    bool same = true, covered = true;
    for (std::size_t l = 0; l <= kDegeneracyMaxLen; ++l) {
      std::set<EndpointTrace> a, b;
      for (const auto& p : scp.at(l).programs) a.insert(simulate_scp(g, inst.source, p));
      for (const auto& p : stp.at(l).programs) b.insert(simulate_stp(g, inst.source, p));
      ++levels;
      for (const auto& tr : b) stp_only_traces += a.contains(tr) ? 0 : 1;
      for (const auto& tr : a) {
        if (!b.contains(tr)) {
          ++scp_only_traces;
          covered = false;
        }
      }
      if (a != b) {
        same = false;
        if (first_bad.empty()) first_bad = fmt("%s l=%zu: scp %zu traces, stp %zu traces", inst.summary.c_str(), l,
                                               a.size(), b.size());
      }
    }
    agree += same ? 1 : 0;
    scp_covered += covered ? 1 : 0;
  }
  Outcome o;
  o.pass = agree == graphs;
  o.detail = fmt("%zu/%zu graphs with identical trace sets over l<=%zu, %.2f s", agree, graphs, kDegeneracyMaxLen,
                 seconds_since(start));
  o.notes.push_back(fmt("traces only stp reaches: %zu; traces only scp reaches: %zu; graphs where every scp trace is "
                        "also an stp trace: %zu/%zu",
                        stp_only_traces, scp_only_traces, scp_covered, graphs));
  if (!first_bad.empty()) o.notes.push_back("first disagreement: " + first_bad);
  return o;
}

// ---------------------------------------------------------------------------
// 8: simulation cost.

Outcome scaling() {
  const auto g = generate_large_graph(0x8ca1e, kScalingVertices, kScalingEdges, kScalingColors);
  SeededRng rng(0x8);
  // A quarter of the vertices as sources keeps every step's frontier at a
  // comparable size, so per-step cost is roughly constant.
  VertexSet s = g.empty_set();
  for (VertexId v = 0; v < g.vertex_count(); v += 4) s.insert(v);
  ColorProgram walk;
  while (walk.size() < 20) walk.push_back(static_cast<ColorId>(rng.below(g.color_count())));
  auto time_prefix = [&](std::size_t len) {
    const ColorProgram p(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(len));
    double best = 1e9;
    for (int r = 0; r < kScalingRepeats; ++r) {
      const auto t0 = Clock::now();
      const auto trace = simulate_scp(g, s, p);
      best = std::min(best, seconds_since(t0));
      if (trace.back().empty()) return -1.0;
    }
    return best;
  };
  Outcome o;
  const double t5 = time_prefix(5), t10 = time_prefix(10), t20 = time_prefix(20);
  const bool linear = t10 <= kScalingFactor * 2 * t5 && t20 <= kScalingFactor * 2 * t10 && t20 <= kScalingFactor * 4 * t5;
  o.pass = t5 > 0 && t10 > 0 && t20 > 0 && t10 < kScalingBudgetSeconds && linear;
  o.detail = fmt("|V|=%zu |E|=%zu, |S|=%zu: |p|=5 %.2f ms, |p|=10 %.2f ms, |p|=20 %.2f ms; ratios %.2f, %.2f (limit %.1f)",
                 g.vertex_count(), g.edge_count(), s.size(), t5 * 1e3, t10 * 1e3, t20 * 1e3, t10 / t5, t20 / t10,
                 kScalingFactor * 2);
  return o;
}

// ---------------------------------------------------------------------------
// 9: hand-built example graphs.

Outcome example_graphs() {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  {
    const auto f = testing::load_fixture("four_step.json");
    const auto& g = f.graph;
    expect(f.source.size() == 3 && colors_of(g, f.source).size() == 1, "four-step: three same-colour sources");
    for (std::size_t k = 0; k < 4; ++k)
      expect(!iterated_out(g, f.source, k).intersects(f.target), fmt("four-step: T reachable in %zu steps", k));
    const auto p = parse_color_program(g, "green,brown,red,yellow");
    const auto q = parse_color_program(g, "green,purple,red,yellow");
    expect(classify_scp(g, f.source, f.target, p).verdict == Verdict::exact, "four-step: green-brown-red-yellow exact");
    const auto cq = classify_scp(g, f.source, f.target, q);
    const auto eq = simulate_scp(g, f.source, q).back();
    expect(cq.verdict == Verdict::infeasible && f.target.is_subset_of(eq) && eq != f.target,
           "four-step: green-purple-red-yellow infeasible superset");
    MiningConfig config;
    config.max_len = 4;
    const auto mined = mine_exact_scp(g, f.source, f.target, config);
    expect(mined.at(4).programs == std::vector<ColorProgram>{p}, "four-step: miner output at l=4");
    for (std::size_t l = 0; l < 4; ++l) expect(mined.at(l).programs.empty(), fmt("four-step: program at l=%zu", l));
  }
  {
    const auto f = testing::load_fixture("two_routes.json");
    const auto& g = f.graph;
    const auto p = parse_color_program(g, "green,red,yellow");
    const auto q = parse_color_program(g, "green,blue,yellow");
    expect(classify_scp(g, f.source, f.target, p).is_feasible(), "two-routes: green-red-yellow feasible");
    expect(classify_scp(g, f.source, f.target, q).is_feasible(), "two-routes: green-blue-yellow feasible");
    MiningConfig config;
    config.max_len = 3;
    auto mined = mine_feasible_scp(g, f.source, f.target, config).at(3).programs;
    std::sort(mined.begin(), mined.end());
    std::vector<ColorProgram> want{p, q};
    std::sort(want.begin(), want.end());
    expect(mined == want, "two-routes: feasible programs at l=3");
  }
  {
    const auto f = testing::load_fixture("toset_cycle.json");
    const auto& g = f.graph;
    const auto& schema = g.schema();
    const auto color = schema.index_of("color"), n = schema.index_of("n");
    auto is = [&](const char* c) {
      return Criterion::atom(color, CompareOp::eq, FeatureValue::category(*schema.find_category(color, c)));
    };
    const TosetProgram p{is("red"), Criterion::all({is("blue"), Criterion::atom(n, CompareOp::le, FeatureValue::number(3))})};
    const TosetProgram q{is("red"), is("blue")};
    bool cyclic = false;
    for (const auto& [u, v] : g.edges()) cyclic = cyclic || iterated_out(g, g.make_set({g.name(v)}), 1).contains(u) ||
                                                 iterated_out(g, g.make_set({g.name(v)}), 2).contains(u);
    expect(cyclic, "toset-cycle: graph has a cycle");
    expect(classify_stp(g, f.source, f.target, p).verdict == Verdict::exact, "toset-cycle: p exact");
    const auto eq = simulate_stp(g, f.source, q).back();
    expect(classify_stp(g, f.source, f.target, q).verdict == Verdict::infeasible && f.target.is_subset_of(eq) &&
               eq != f.target,
           "toset-cycle: p' infeasible superset");
    MiningConfig config;
    config.max_len = 2;
    const auto mined = mine_exact_stp(g, f.source, f.target, config).at(2).programs;
    expect(!mined.empty(), "toset-cycle: miner finds an exact toset program");
    for (const auto& m : mined)
      expect(classify_stp(g, f.source, f.target, m).verdict == Verdict::exact, "toset-cycle: mined program exact");
  }
  Outcome o;
  o.pass = failures.empty();
  o.detail = o.pass ? "four-step, two-routes and toset-cycle reproduce" : fmt("%zu checks failed", failures.size());
  for (const auto& f : failures) o.notes.push_back(f);
  return o;
}

}  // namespace
}  // namespace walkmine

int main() {
  using namespace walkmine;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact colour programs equal the oracle", [] { return oracle_equivalence(MiningMode::exact); }},
      {"feasible colour programs equal the oracle", [] { return oracle_equivalence(MiningMode::feasible); }},
      {"emitted programs re-classify", soundness},
      {"G2 regression", g2_regression},
      {"structural properties", structural_properties},
      {"criterion synthesis contract", criterion_contract},
      {"toset and colour engines agree on colour-only graphs", cross_engine},
      {"simulation scaling", scaling},
      {"example graphs", example_graphs},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.detail = std::string("exception: ") + e.what();
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail << "\n";
    for (const auto& n : o.notes) std::cout << "  " << n << "\n";
    std::cout << std::flush;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
