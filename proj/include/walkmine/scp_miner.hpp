#pragma once

#include <vector>

#include "walkmine/color_program.hpp"
#include "walkmine/mining.hpp"

namespace walkmine {

using ScpReport = MiningReport<ColorProgram>;

/// Backward-search frontier record: every A with B ⊆ A ⊆ M is carried by
/// `suffix` onto T (exact mode) or into T without emptying (feasible mode).
struct SearchTriple {
  ColorProgram suffix;
  VertexSet b;
  VertexSet m;

  std::size_t level() const { return suffix.size(); }

  friend bool operator==(const SearchTriple&, const SearchTriple&) = default;
  friend std::strong_ordering operator<=>(const SearchTriple&, const SearchTriple&) = default;
};

/// Mines simple colour programs of every length 0..config.max_len, one report
/// per length in ascending order. Reports are also passed to `on_level` as
/// soon as each length completes. Stops after the first length whose search
/// hit a resource cap (that report has exhausted == false).
///
/// Throws std::invalid_argument when S or T is empty or the graph has no
/// colour dimension.
std::vector<ScpReport> mine_scp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t, MiningMode mode,
                                const MiningConfig& config, const LevelCallback<ColorProgram>& on_level = {});

inline std::vector<ScpReport> mine_exact_scp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t,
                                             const MiningConfig& config) {
  return mine_scp(g, s, t, MiningMode::exact, config);
}

inline std::vector<ScpReport> mine_feasible_scp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t,
                                                const MiningConfig& config) {
  return mine_scp(g, s, t, MiningMode::feasible, config);
}

}  // namespace walkmine
