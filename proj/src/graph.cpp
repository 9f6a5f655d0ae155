#include "walkmine/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "walkmine/error.hpp"

namespace walkmine {

namespace {

void build_csr(std::size_t n, std::vector<Edge> edges, std::vector<std::size_t>& offsets,
               std::vector<VertexId>& targets) {
  std::sort(edges.begin(), edges.end());
  offsets.assign(n + 1, 0);
  targets.clear();
  targets.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    ++offsets[u + 1];
    targets.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
}

}  // namespace

DirectedGraph::DirectedGraph(FeatureSchema schema, std::vector<std::string> names, std::vector<FeatureVector> features,
                             std::vector<Edge> edges, std::optional<std::string> color_dimension)
    : schema_(std::move(schema)), names_(std::move(names)), features_(std::move(features)) {
  const auto n = names_.size();
  if (features_.size() != n) throw InputError("feature table size does not match vertex count");
  for (VertexId v = 0; v < n; ++v)
    if (!index_.emplace(names_[v], v).second) throw InputError("duplicate vertex id", names_[v]);
  for (VertexId v = 0; v < n; ++v)
    if (!schema_.conforms(features_[v])) throw InputError("feature vector does not conform to schema", names_[v]);

  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u >= n || v >= n) throw InputError("edge endpoint out of range");
    if (i > 0 && edges[i - 1] == edges[i])
      throw InputError("duplicate edge in simple graph", names_[u] + "->" + names_[v]);
  }
  std::vector<Edge> reversed;
  reversed.reserve(edges.size());
  for (const auto& [u, v] : edges) reversed.emplace_back(v, u);
  build_csr(n, std::move(edges), out_offsets_, out_targets_);
  build_csr(n, std::move(reversed), in_offsets_, in_sources_);

  if (color_dimension) {
    auto dim = schema_.find(*color_dimension);
    if (!dim) throw InputError("colour dimension '" + *color_dimension + "' not in schema");
    if (schema_.dimension(*dim).kind != FeatureKind::categorical)
      throw InputError("colour dimension '" + *color_dimension + "' is not categorical");
    color_dim_ = dim;
  } else if (auto dim = schema_.find("color"); dim && schema_.dimension(*dim).kind == FeatureKind::categorical) {
    color_dim_ = dim;
  }
  if (color_dim_) {
    color_classes_.assign(schema_.category_count(*color_dim_), VertexSet(n));
    for (VertexId v = 0; v < n; ++v)
      if (const auto& x = features_[v][*color_dim_]; x.is_category()) color_classes_[x.as_category()].insert(v);
  }

  std::unordered_map<FeatureVector, std::uint32_t, FeatureVectorHash> classes;
  feature_class_.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    auto [it, inserted] = classes.emplace(features_[v], static_cast<std::uint32_t>(classes.size()));
    feature_class_[v] = it->second;
  }
  feature_class_count_ = classes.size();
}

std::optional<VertexId> DirectedGraph::find(std::string_view name) const {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (auto v : successors(u)) out.emplace_back(u, v);
  return out;
}

VertexSet DirectedGraph::make_set(std::initializer_list<std::string_view> names) const {
  VertexSet s = empty_set();
  for (auto name : names) {
    auto v = find(name);
    if (!v) throw InputError("unknown vertex id", std::string(name));
    s.insert(*v);
  }
  return s;
}

VertexSet DirectedGraph::make_set(std::span<const std::string> names) const {
  VertexSet s = empty_set();
  for (const auto& name : names) {
    auto v = find(name);
    if (!v) throw InputError("unknown vertex id", name);
    s.insert(*v);
  }
  return s;
}

std::size_t DirectedGraph::color_dimension() const {
  if (!color_dim_) throw std::logic_error("graph has no designated colour dimension");
  return *color_dim_;
}

std::size_t DirectedGraph::color_count() const { return schema_.category_count(color_dimension()); }

std::optional<ColorId> DirectedGraph::color(VertexId v) const {
  const auto& x = features_.at(v)[color_dimension()];
  if (x.is_category()) return x.as_category();
  return std::nullopt;
}

std::optional<ColorId> DirectedGraph::find_color(std::string_view name) const {
  return schema_.find_category(color_dimension(), name);
}

DirectedGraph DirectedGraph::with_color_dimension(std::string_view dimension) const {
  return DirectedGraph(schema_, names_, features_, edges(), std::string(dimension));
}

DirectedGraph convert_multigraph(const MultiGraph& g, std::optional<std::string> color_dimension) {
  const auto n = g.names.size();
  std::vector<std::string> names = g.names;
  std::vector<FeatureVector> features = g.features;
  std::vector<Edge> edges;
  edges.reserve(2 * g.edges.size());

  std::unordered_map<std::string, int> taken;
  for (const auto& name : names) taken.emplace(name, 0);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.src >= n || e.dst >= n) throw InputError("edge endpoint out of range");
    std::string name = g.names[e.src] + "->" + g.names[e.dst] + "#" + std::to_string(i);
    while (taken.contains(name)) name += "'";
    taken.emplace(name, 0);
    const auto x = static_cast<VertexId>(names.size());
    names.push_back(std::move(name));
    features.push_back(e.features ? *e.features : FeatureVector(g.schema.size()));
    edges.emplace_back(e.src, x);
    edges.emplace_back(x, e.dst);
  }
  return DirectedGraph(g.schema, std::move(names), std::move(features), std::move(edges), std::move(color_dimension));
}

VertexSet out_neighbors(const DirectedGraph& g, const VertexSet& a) {
  VertexSet out = g.empty_set();
  for (auto v : a)
    for (auto w : g.successors(v)) out.insert(w);
  return out;
}

VertexSet in_neighbors(const DirectedGraph& g, const VertexSet& a) {
  VertexSet out = g.empty_set();
  for (auto v : a)
    for (auto w : g.predecessors(v)) out.insert(w);
  return out;
}

VertexSet iterated_out(const DirectedGraph& g, VertexSet a, std::size_t n) {
  for (std::size_t i = 0; i < n && !a.empty(); ++i) a = out_neighbors(g, a);
  return a;
}

VertexSet iterated_in(const DirectedGraph& g, VertexSet a, std::size_t n) {
  for (std::size_t i = 0; i < n && !a.empty(); ++i) a = in_neighbors(g, a);
  return a;
}

VertexSet select_by_color(const DirectedGraph& g, const VertexSet& a, ColorId c) {
  if (c >= g.color_count()) return g.empty_set();
  return a & g.color_class(c);
}

std::vector<ColorId> colors_of(const DirectedGraph& g, const VertexSet& a) {
  std::vector<ColorId> out;
  for (ColorId c = 0; c < g.color_count(); ++c)
    if (a.intersects(g.color_class(c))) out.push_back(c);
  return out;
}

std::vector<VertexSet> forward_levels(const DirectedGraph& g, const VertexSet& s, std::size_t max_len) {
  std::vector<VertexSet> levels;
  levels.reserve(max_len + 1);
  levels.push_back(s);
  for (std::size_t l = 1; l <= max_len; ++l) levels.push_back(out_neighbors(g, levels.back()));
  return levels;
}

std::vector<std::size_t> reachability_levels(const DirectedGraph& g, const VertexSet& s, const VertexSet& t,
                                             std::size_t max_len) {
  std::vector<std::size_t> out;
  VertexSet frontier = s;
  for (std::size_t l = 0; l <= max_len; ++l) {
    if (l > 0) frontier = out_neighbors(g, frontier);
    if (t.is_subset_of(frontier)) out.push_back(l);
    if (frontier.empty()) break;
  }
  return out;
}

}  // namespace walkmine
