#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "walkmine/color_program.hpp"
#include "walkmine/graph.hpp"

namespace walkmine {

/// mt19937_64 with hand-written range reduction, so sequences do not depend
/// on the standard library's distribution implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  /// Uniform in [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

struct GeneratorOptions {
  std::size_t max_vertices = 12;
  std::size_t max_colors = 4;
  /// No ordered dimensions besides the colour.
  bool color_only = false;
  /// Forces the family; chosen from the seed when unset.
  std::optional<bool> layered;
};

struct Instance {
  std::uint64_t seed = 0;
  DirectedGraph graph;
  VertexSet source;
  VertexSet target;
  /// The program whose endpoint set was planted as T (empty if T was drawn
  /// at random because the walk halted).
  ColorProgram planted;
  /// "seed=7 family=layered |V|=9 k=3 density=0.31 dims=2".
  std::string summary;
};

/// Random instance with |V| <= max_vertices and k <= max_colors. Layered
/// graphs only have edges between consecutive layers; unlayered graphs take
/// arbitrary edges including self-loops and back edges. S holds 1-3
/// vertices and T is the endpoint set of a random walk-consistent program
/// from S.
Instance generate_instance(std::uint64_t seed, const GeneratorOptions& options = {});

/// Colour-only graph with exactly `edges` distinct random edges over
/// `vertices` vertices and `colors` colours.
DirectedGraph generate_large_graph(std::uint64_t seed, std::size_t vertices, std::size_t edges, std::size_t colors);

}  // namespace walkmine
