#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "walkmine/color_program.hpp"
#include "walkmine/criterion.hpp"
#include "walkmine/graph.hpp"

namespace walkmine {

/// Brute-force reference implementations. Everything here walks the raw
/// edge list and feature vectors directly and shares no search code with the
/// miners, so it can serve as an independent check.

inline constexpr std::size_t default_oracle_cap = 1'000'000;

struct OracleSets {
  std::vector<ColorProgram> exact;
  std::vector<ColorProgram> feasible;
};

/// Classifies all k^length colour programs. Throws std::length_error if
/// k^length exceeds `cap`.
OracleSets brute_force_mine_scp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t, std::size_t length,
                                std::size_t cap = default_oracle_cap);

/// Colour traces of all length-`length` walks from S to T, deduplicated and
/// sorted. Throws std::length_error once more than `cap` walk prefixes are
/// explored.
std::vector<ColorProgram> walk_traces(const DirectedGraph& g, const VertexSet& s, const VertexSet& t,
                                      std::size_t length, std::size_t cap = default_oracle_cap);

/// All inclusion-minimal subsets of `universe` whose images (indexed by
/// vertex id) jointly contain `b`, by exhaustive subset scan. Throws
/// std::length_error if |universe| > 20.
std::vector<VertexSet> minimal_covers_bruteforce(const VertexSet& universe, const std::vector<VertexSet>& images,
                                                 const VertexSet& b);

struct WalkTrace {
  std::vector<VertexId> vertices;
};

/// A walk from S to T whose vertex colours after the start read `p`, built
/// backwards from the final endpoint set; nullopt if `p` is not feasible.
std::optional<WalkTrace> extract_walk(const DirectedGraph& g, const VertexSet& s, const VertexSet& t,
                                      const ColorProgram& p);

/// Endpoint sets E^0..E^n where step i keeps out-neighbours w of E^{i-1}
/// with accept(w, i-1).
using StepFilter = std::function<bool(VertexId, std::size_t)>;
EndpointTrace reference_endpoints(const DirectedGraph& g, const VertexSet& s, std::size_t steps,
                                  const StepFilter& accept);

Classification reference_classify_scp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t,
                                      const ColorProgram& p);
Classification reference_classify_stp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t,
                                      const TosetProgram& p);

/// Criterion evaluation written directly from the satisfaction rules.
bool reference_satisfies(const FeatureSchema& schema, const FeatureVector& x, const Criterion& c);

}  // namespace walkmine
