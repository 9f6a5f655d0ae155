#include "walkmine/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <unordered_map>
#include <sstream>

#include "json.hpp"
#include "walkmine/error.hpp"

namespace walkmine {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(std::string("missing \"") + key + "\"", where);
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_string()) throw InputError(std::string("\"") + key + "\" must be a string", where + "." + key);
  return v.get<std::string>();
}

FeatureValue parse_value(FeatureSchema& schema, std::size_t dim, const json& v, const std::string& where) {
  if (v.is_null()) return FeatureValue::missing();
  const auto& d = schema.dimension(dim);
  if (d.kind == FeatureKind::categorical) {
    if (!v.is_string()) throw InputError("categorical feature '" + d.name + "' expects a string", where);
    return FeatureValue::category(schema.intern(dim, v.get<std::string>()));
  }
  if (!v.is_number() || v.is_boolean())
    throw InputError("ordered feature '" + d.name + "' expects a number", where);
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InputError("ordered feature '" + d.name + "' must be finite", where);
  return FeatureValue::number(x);
}

FeatureVector parse_features(FeatureSchema& schema, const json& obj, const std::string& where) {
  if (!obj.is_object()) throw InputError("\"features\" must be an object", where);
  FeatureVector out(schema.size());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    auto dim = schema.find(it.key());
    if (!dim) throw InputError("unknown feature name '" + it.key() + "'", where + "." + it.key());
    out[*dim] = parse_value(schema, *dim, it.value(), where + "." + it.key());
  }
  return out;
}

std::optional<std::vector<std::string>> parse_id_list(const json& root, const char* key) {
  auto it = root.find(key);
  if (it == root.end() || it->is_null()) return std::nullopt;
  if (!it->is_array()) throw InputError(std::string("\"") + key + "\" must be an array of vertex ids", key);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const auto& v = (*it)[i];
    if (!v.is_string()) throw InputError("vertex id must be a string", std::string(key) + "[" + std::to_string(i) + "]");
    ids.push_back(v.get<std::string>());
  }
  return ids;
}

ojson value_to_json(const FeatureSchema& schema, std::size_t dim, const FeatureValue& v) {
  if (v.is_missing()) return nullptr;
  if (v.is_category()) return schema.category_name(dim, v.as_category());
  return v.as_number();
}

ojson features_to_json(const FeatureSchema& schema, const FeatureVector& f) {
  ojson out = ojson::object();
  for (std::size_t d = 0; d < schema.size(); ++d) out[schema.dimension(d).name] = value_to_json(schema, d, f[d]);
  return out;
}

ojson schema_to_json(const FeatureSchema& schema) {
  ojson out = ojson::array();
  for (const auto& d : schema.dimensions()) out.push_back({{"name", d.name}, {"kind", std::string(to_string(d.kind))}});
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

GraphDocument load_graph_document(std::string_view text, const LoadOptions& options) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what(), "byte " + std::to_string(e.byte));
  }
  if (!root.is_object()) throw InputError("top level must be an object", "$");

  FeatureSchema schema;
  const auto& schema_json = require(root, "schema", "$");
  if (!schema_json.is_array()) throw InputError("\"schema\" must be an array", "schema");
  for (std::size_t i = 0; i < schema_json.size(); ++i) {
    const std::string where = "schema[" + std::to_string(i) + "]";
    const auto& entry = schema_json[i];
    if (!entry.is_object()) throw InputError("schema entry must be an object", where);
    auto name = require_string(entry, "name", where);
    auto kind = require_string(entry, "kind", where);
    FeatureKind k;
    if (kind == "categorical") {
      k = FeatureKind::categorical;
    } else if (kind == "ordered") {
      k = FeatureKind::ordered;
    } else {
      throw InputError("kind must be \"categorical\" or \"ordered\"", where + ".kind");
    }
    try {
      schema.add_dimension(std::move(name), k);
    } catch (const InputError& e) {
      throw InputError(e.what(), where + ".name");
    }
  }

  const auto& vertices_json = require(root, "vertices", "$");
  if (!vertices_json.is_array()) throw InputError("\"vertices\" must be an array", "vertices");
  std::vector<std::string> names;
  std::vector<FeatureVector> features;
  std::unordered_map<std::string, VertexId> index;
  for (std::size_t i = 0; i < vertices_json.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    const auto& entry = vertices_json[i];
    if (!entry.is_object()) throw InputError("vertex entry must be an object", where);
    auto id = require_string(entry, "id", where);
    if (!index.emplace(id, static_cast<VertexId>(names.size())).second)
      throw InputError("duplicate vertex id '" + id + "'", where + ".id");
    names.push_back(std::move(id));
    auto f = entry.find("features");
    features.push_back(f == entry.end() || f->is_null() ? FeatureVector(schema.size())
                                                        : parse_features(schema, *f, where + ".features"));
  }

  std::vector<MultiEdge> edges;
  if (auto it = root.find("edges"); it != root.end()) {
    if (!it->is_array()) throw InputError("\"edges\" must be an array", "edges");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      const auto& entry = (*it)[i];
      if (!entry.is_object()) throw InputError("edge entry must be an object", where);
      MultiEdge e;
      for (const char* key : {"src", "dst"}) {
        auto name = require_string(entry, key, where);
        auto found = index.find(name);
        if (found == index.end()) throw InputError("dangling edge endpoint '" + name + "'", where + "." + key);
        (key[0] == 's' ? e.src : e.dst) = found->second;
      }
      if (auto f = entry.find("features"); f != entry.end() && !f->is_null() && !(f->is_object() && f->empty()))
        e.features = parse_features(schema, *f, where + ".features");
      edges.push_back(std::move(e));
    }
  }

  GraphDocument doc;
  doc.source = parse_id_list(root, "source");
  doc.target = parse_id_list(root, "target");

  bool multi = std::any_of(edges.begin(), edges.end(), [](const MultiEdge& e) { return e.features.has_value(); });
  if (!multi) {
    std::set<Edge> seen;
    for (const auto& e : edges)
      if (!seen.emplace(e.src, e.dst).second) {
        multi = true;
        break;
      }
  }
  if (multi) {
    doc.graph = MultiGraph{std::move(schema), std::move(names), std::move(features), std::move(edges)};
  } else {
    std::vector<Edge> simple;
    simple.reserve(edges.size());
    for (const auto& e : edges) simple.emplace_back(e.src, e.dst);
    doc.graph = DirectedGraph(std::move(schema), std::move(names), std::move(features), std::move(simple),
                              options.color_dimension);
  }
  return doc;
}

LoadedGraph load_graph(std::string_view text, const LoadOptions& options) {
  return load_graph_document(text, options).graph;
}

DirectedGraph load_directed_graph(std::string_view text, const LoadOptions& options) {
  auto g = load_graph(text, options);
  if (auto* d = std::get_if<DirectedGraph>(&g)) return std::move(*d);
  throw InputError("graph has edge features or parallel edges; convert it to a simple graph first");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string to_graph_json(const DirectedGraph& g, const SaveOptions& options) {
  ojson root;
  root["schema"] = schema_to_json(g.schema());
  ojson vertices = ojson::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    vertices.push_back({{"id", g.name(v)}, {"features", features_to_json(g.schema(), g.features(v))}});
  root["vertices"] = std::move(vertices);
  ojson edges = ojson::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({{"src", g.name(u)}, {"dst", g.name(v)}});
  root["edges"] = std::move(edges);
  auto ids = [&](const VertexSet& s) {
    ojson out = ojson::array();
    for (auto v : s) out.push_back(g.name(v));
    return out;
  };
  if (options.source) root["source"] = ids(*options.source);
  if (options.target) root["target"] = ids(*options.target);
  return root.dump(2) + "\n";
}

std::string to_graph_json(const MultiGraph& g) {
  ojson root;
  root["schema"] = schema_to_json(g.schema);
  ojson vertices = ojson::array();
  for (std::size_t v = 0; v < g.names.size(); ++v)
    vertices.push_back({{"id", g.names[v]}, {"features", features_to_json(g.schema, g.features[v])}});
  root["vertices"] = std::move(vertices);
  ojson edges = ojson::array();
  for (const auto& e : g.edges) {
    ojson entry = {{"src", g.names[e.src]}, {"dst", g.names[e.dst]}};
    if (e.features) entry["features"] = features_to_json(g.schema, *e.features);
    edges.push_back(std::move(entry));
  }
  root["edges"] = std::move(edges);
  return root.dump(2) + "\n";
}

VertexSet parse_vertex_set(const DirectedGraph& g, std::string_view text) {
  VertexSet s = g.empty_set();
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    if (line.empty()) continue;
    auto v = g.find(line);
    if (!v) throw InputError("unknown vertex id '" + std::string(line) + "'", "line " + std::to_string(line_no));
    s.insert(*v);
  }
  return s;
}

std::string format_vertex_set(const DirectedGraph& g, const VertexSet& s) {
  std::string out;
  for (auto v : s) out += g.name(v) + "\n";
  return out;
}

std::string describe(const DirectedGraph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s) {
    if (!first) out += ", ";
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

std::string to_dot(const DirectedGraph& g, const DotOptions& options) {
  std::ostringstream out;
  out << "digraph G {\n  node [style=filled, fillcolor=white];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  " << dot_quote(g.name(v)) << " [";
    std::vector<std::string> attrs;
    if (g.has_color())
      if (auto c = g.color(v)) attrs.push_back("fillcolor=" + dot_quote(g.color_name(*c)));
    const bool in_s = options.source && options.source->contains(v);
    const bool in_t = options.target && options.target->contains(v);
    if (in_s && in_t) {
      attrs.emplace_back("shape=tripleoctagon");
    } else if (in_t) {
      attrs.emplace_back("shape=doubleoctagon");
    } else if (in_s) {
      attrs.emplace_back("shape=doublecircle");
    }
    if (options.trace) {
      std::string steps;
      for (std::size_t i = 0; i < options.trace->size(); ++i)
        if ((*options.trace)[i].contains(v)) steps += (steps.empty() ? "E" : ",E") + std::to_string(i);
      if (!steps.empty()) {
        attrs.push_back("xlabel=" + dot_quote(steps));
        attrs.emplace_back("penwidth=3");
      }
    }
    for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << dot_quote(g.name(u)) << " -> " << dot_quote(g.name(v)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace walkmine
