#include "walkmine/generator.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace walkmine {

namespace {

constexpr const char* kPalette[] = {"red", "green", "blue", "yellow", "purple", "brown", "orange", "grey"};

FeatureSchema color_schema(std::size_t colors, std::size_t ordered_dims) {
  FeatureSchema schema;
  const auto dim = schema.add_dimension("color", FeatureKind::categorical);
  for (std::size_t c = 0; c < colors; ++c) schema.intern(dim, kPalette[c % std::size(kPalette)]);
  for (std::size_t i = 0; i < ordered_dims; ++i) schema.add_dimension("x" + std::to_string(i + 1), FeatureKind::ordered);
  return schema;
}

std::vector<std::string> vertex_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

}  // namespace

std::uint64_t SeededRng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("SeededRng::below: empty range");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

double SeededRng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Instance generate_instance(std::uint64_t seed, const GeneratorOptions& options) {
  SeededRng rng(seed);
  const std::size_t n = rng.between(std::min<std::size_t>(4, options.max_vertices), options.max_vertices);
  const std::size_t k = rng.between(std::min<std::size_t>(2, options.max_colors), options.max_colors);
  const bool layered = options.layered.value_or(rng.chance(0.5));
  const double density = 0.15 + 0.3 * rng.unit();
  const std::size_t dims = options.color_only ? 0 : rng.below(3);

  auto schema = color_schema(k, dims);
  std::vector<FeatureVector> features(n);
  for (auto& x : features) {
    x.push_back(FeatureValue::category(static_cast<CategoryId>(rng.below(k))));
    for (std::size_t d = 0; d < dims; ++d)
      x.push_back(rng.chance(0.1) ? FeatureValue::missing() : FeatureValue::number(static_cast<double>(rng.below(4))));
  }

  std::vector<std::size_t> layer(n, 0);
  if (layered) {
    const std::size_t layers = rng.between(3, 5);
    for (std::size_t v = 0; v < n; ++v) layer[v] = v < layers ? v : rng.below(layers);
  }
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (layered && layer[v] != layer[u] + 1) continue;
      const double p = layered ? 2 * density : density;
      if (rng.chance(p)) edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }

  Instance out;
  out.seed = seed;
  out.graph = DirectedGraph(std::move(schema), vertex_names(n), std::move(features), std::move(edges));
  const auto& g = out.graph;

  std::vector<VertexId> starts;
  for (VertexId v = 0; v < n; ++v)
    if (!layered || layer[v] == 0) starts.push_back(v);
  out.source = g.empty_set();
  const std::size_t s_size = rng.between(1, std::min<std::size_t>(3, starts.size()));
  while (out.source.size() < s_size) out.source.insert(starts[rng.below(starts.size())]);

  const std::size_t steps = rng.between(1, 4);
  VertexSet e = out.source;
  for (std::size_t i = 0; i < steps; ++i) {
    const auto colors = colors_of(g, out_neighbors(g, e));
    if (colors.empty()) break;
    const auto c = colors[rng.below(colors.size())];
    out.planted.push_back(c);
    e = color_image(g, e, c);
  }
  if (out.planted.empty()) {
    e = g.empty_set();
    e.insert(static_cast<VertexId>(rng.below(n)));
  }
  out.target = e;

  char buf[160];
  std::snprintf(buf, sizeof buf, "seed=%llu family=%s |V|=%zu k=%zu density=%.2f dims=%zu",
                static_cast<unsigned long long>(seed), layered ? "layered" : "unlayered", n, k, density, dims + 1);
  out.summary = buf;
  return out;
}

DirectedGraph generate_large_graph(std::uint64_t seed, std::size_t vertices, std::size_t edges, std::size_t colors) {
  if (edges > vertices * vertices) throw std::invalid_argument("generate_large_graph: too many edges");
  SeededRng rng(seed);
  std::vector<FeatureVector> features(vertices);
  for (auto& x : features) x.push_back(FeatureValue::category(static_cast<CategoryId>(rng.below(colors))));
  std::set<Edge> chosen;
  while (chosen.size() < edges)
    chosen.emplace(static_cast<VertexId>(rng.below(vertices)), static_cast<VertexId>(rng.below(vertices)));
  return DirectedGraph(color_schema(colors, 0), vertex_names(vertices), std::move(features),
                       std::vector<Edge>(chosen.begin(), chosen.end()));
}

}  // namespace walkmine
