#pragma once

#include <cstddef>
#include <vector>

#include "walkmine/criterion.hpp"
#include "walkmine/mining.hpp"

namespace walkmine {

using StpReport = MiningReport<TosetProgram>;

struct ChainElement {
  VertexSet b;
  VertexSet m;
  std::size_t dist_to_t = 0;
};

/// Ordered from the T side: chain[0] is the (T, T, 0) seed (({t}, T, 0) in
/// feasible mode) and chain.back() is the current head.
using BasisChain = std::vector<ChainElement>;

/// True iff no vertex of `b_side` shares its feature vector with a vertex of
/// `e_side`. Throws std::invalid_argument unless both sides are disjoint
/// subsets of N_o(a).
bool consistent(const DirectedGraph& g, const VertexSet& a, const VertexSet& b_side, const VertexSet& e_side);

struct ChainSearchResult {
  std::vector<BasisChain> chains;
  bool exhausted = true;
};

/// Phase one for a single length: every chain whose head reaches distance
/// `length` with B ⊆ S ⊆ M.
ChainSearchResult search_basis_chains(const DirectedGraph& g, const VertexSet& s, const VertexSet& t, MiningMode mode,
                                      std::size_t length, const MiningConfig& config, SearchBudget& budget,
                                      SearchStats& stats);

/// Mines simple toset programs of every length 0..config.max_len with the
/// same report contract as mine_scp. Programs are sorted by their rendering.
std::vector<StpReport> mine_stp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t, MiningMode mode,
                                const MiningConfig& config, const LevelCallback<TosetProgram>& on_level = {});

inline std::vector<StpReport> mine_exact_stp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t,
                                             const MiningConfig& config) {
  return mine_stp(g, s, t, MiningMode::exact, config);
}

inline std::vector<StpReport> mine_feasible_stp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t,
                                                const MiningConfig& config) {
  return mine_stp(g, s, t, MiningMode::feasible, config);
}

}  // namespace walkmine
