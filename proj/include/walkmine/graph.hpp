#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "walkmine/feature.hpp"
#include "walkmine/vertex_set.hpp"

namespace walkmine {

using ColorId = CategoryId;
using Edge = std::pair<VertexId, VertexId>;

/// Simple directed graph with feature-labelled vertices. Immutable after
/// construction; all queries are const and safe to share across threads.
///
/// One categorical dimension may be designated as "the" colour. By default
/// this is the dimension named "color" when it exists and is categorical.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Throws InputError on duplicate names, out-of-range endpoints, duplicate
  /// edges, non-conforming feature vectors, or a bad colour designation.
  DirectedGraph(FeatureSchema schema, std::vector<std::string> names, std::vector<FeatureVector> features,
                std::vector<Edge> edges, std::optional<std::string> color_dimension = std::nullopt);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return out_targets_.size(); }

  const FeatureSchema& schema() const { return schema_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  const FeatureVector& features(VertexId v) const { return features_.at(v); }

  std::span<const VertexId> successors(VertexId v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const VertexId> predecessors(VertexId v) const {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  /// Edges sorted by (source, target).
  std::vector<Edge> edges() const;

  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
  /// Builds a set from vertex names; throws InputError for unknown names.
  VertexSet make_set(std::initializer_list<std::string_view> names) const;
  VertexSet make_set(std::span<const std::string> names) const;

  bool has_color() const { return color_dim_.has_value(); }
  /// Throws std::logic_error when no colour dimension is designated.
  std::size_t color_dimension() const;
  /// k: size of the colour dimension's domain.
  std::size_t color_count() const;
  std::optional<ColorId> color(VertexId v) const;
  const VertexSet& color_class(ColorId c) const { return color_classes_.at(c); }
  const std::string& color_name(ColorId c) const { return schema_.category_name(color_dimension(), c); }
  std::optional<ColorId> find_color(std::string_view name) const;

  /// Copy of this graph with a different colour designation.
  DirectedGraph with_color_dimension(std::string_view dimension) const;

  /// Vertices share a feature class iff their feature vectors are equal.
  std::uint32_t feature_class(VertexId v) const { return feature_class_[v]; }
  std::size_t feature_class_count() const { return feature_class_count_; }

 private:
  FeatureSchema schema_;
  std::vector<std::string> names_;
  std::vector<FeatureVector> features_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<VertexId> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<VertexId> in_sources_;
  std::optional<std::size_t> color_dim_;
  std::vector<VertexSet> color_classes_;
  std::vector<std::uint32_t> feature_class_;
  std::size_t feature_class_count_ = 0;
};

struct MultiEdge {
  VertexId src = 0;
  VertexId dst = 0;
  std::optional<FeatureVector> features;
};

/// Directed multigraph whose edges may carry feature vectors.
struct MultiGraph {
  FeatureSchema schema;
  std::vector<std::string> names;
  std::vector<FeatureVector> features;
  std::vector<MultiEdge> edges;
};

/// Subdivides every edge e=(u,v) into u -> x_e -> v, where x_e carries e's
/// features (all Missing when e has none).
DirectedGraph convert_multigraph(const MultiGraph& g, std::optional<std::string> color_dimension = std::nullopt);

VertexSet out_neighbors(const DirectedGraph& g, const VertexSet& a);
VertexSet in_neighbors(const DirectedGraph& g, const VertexSet& a);
VertexSet iterated_out(const DirectedGraph& g, VertexSet a, std::size_t n);
VertexSet iterated_in(const DirectedGraph& g, VertexSet a, std::size_t n);

/// Members of `a` whose colour is `c`; Missing never matches.
VertexSet select_by_color(const DirectedGraph& g, const VertexSet& a, ColorId c);
/// Colours present in `a`, ascending.
std::vector<ColorId> colors_of(const DirectedGraph& g, const VertexSet& a);

/// [N_o^0(S), ..., N_o^max_len(S)].
std::vector<VertexSet> forward_levels(const DirectedGraph& g, const VertexSet& s, std::size_t max_len);

/// Ascending lengths l <= max_len with T a subset of N_o^l(S).
std::vector<std::size_t> reachability_levels(const DirectedGraph& g, const VertexSet& s, const VertexSet& t,
                                             std::size_t max_len);

}  // namespace walkmine
