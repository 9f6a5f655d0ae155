#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "walkmine/graph.hpp"

namespace walkmine {

/// A vertex eligible for a cover, with the part of the required set it reaches.
struct CoverCandidate {
  VertexId vertex;
  VertexSet image;
};

/// All inclusion-minimal subsets of `candidates` whose images jointly contain
/// `required`, sorted lexicographically by member ids. Sets are over
/// `universe` vertex ids. An empty `required` yields the single empty cover.
///
/// Branches on the lowest uncovered element, tries each candidate reaching it
/// in id order while excluding the earlier siblings from the subtree, and cuts
/// a branch as soon as some chosen vertex loses its last private element. Each
/// minimal cover is produced exactly once and no post-filtering is needed.
std::vector<VertexSet> enumerate_minimal_covers(std::size_t universe, const std::vector<CoverCandidate>& candidates,
                                                const VertexSet& required,
                                                std::size_t limit = std::numeric_limits<std::size_t>::max());

/// c-pseudo-bases for (B, M) inside `pool`: minimal sets whose c-image covers
/// B and stays inside M. Pool members whose own c-image leaves M are dropped
/// up front since they would break injection.
std::vector<VertexSet> enumerate_pseudo_bases(const DirectedGraph& g, const VertexSet& pool, const VertexSet& b,
                                              const VertexSet& m, ColorId c,
                                              std::size_t limit = std::numeric_limits<std::size_t>::max());

}  // namespace walkmine
