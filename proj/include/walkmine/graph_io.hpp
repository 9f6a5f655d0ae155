#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "walkmine/graph.hpp"

namespace walkmine {

using LoadedGraph = std::variant<DirectedGraph, MultiGraph>;

struct LoadOptions {
  /// Categorical dimension to use as the colour; nullopt picks "color".
  std::optional<std::string> color_dimension;
};

/// A parsed graph-json document. Besides the graph, fixture files may carry
/// optional top-level "source" and "target" vertex-id arrays.
struct GraphDocument {
  LoadedGraph graph;
  std::optional<std::vector<std::string>> source;
  std::optional<std::vector<std::string>> target;
};

/// Parses graph-json. Returns a MultiGraph iff some edge carries a non-empty
/// "features" object or parallel edges exist. Vertex ids follow file order;
/// categorical values are interned in first-occurrence order. Throws
/// InputError (with a JSON-path location) on any malformed input.
GraphDocument load_graph_document(std::string_view text, const LoadOptions& options = {});
LoadedGraph load_graph(std::string_view text, const LoadOptions& options = {});
/// Like load_graph but rejects multigraph input.
DirectedGraph load_directed_graph(std::string_view text, const LoadOptions& options = {});

std::string read_file(const std::string& path);

struct SaveOptions {
  const VertexSet* source = nullptr;
  const VertexSet* target = nullptr;
};

std::string to_graph_json(const DirectedGraph& g, const SaveOptions& options = {});
std::string to_graph_json(const MultiGraph& g);

/// Newline-separated vertex ids; blank lines are skipped.
VertexSet parse_vertex_set(const DirectedGraph& g, std::string_view text);
std::string format_vertex_set(const DirectedGraph& g, const VertexSet& s);
/// "{a, b}" rendering for diagnostics and text reports.
std::string describe(const DirectedGraph& g, const VertexSet& s);

struct DotOptions {
  const VertexSet* source = nullptr;
  const VertexSet* target = nullptr;
  /// Endpoint sets E^0..E^n; members are annotated with their step indices.
  const std::vector<VertexSet>* trace = nullptr;
};

/// One digraph; the colour feature becomes fillcolor, S is double-circled and
/// T drawn as a double octagon.
std::string to_dot(const DirectedGraph& g, const DotOptions& options = {});

}  // namespace walkmine
