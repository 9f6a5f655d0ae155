#pragma once

#include <string>

#include "walkmine/graph_io.hpp"

namespace walkmine::testing {

struct Fixture {
  DirectedGraph graph;
  VertexSet source;
  VertexSet target;
};

inline std::string fixture_path(const std::string& name) { return std::string(WALKMINE_FIXTURE_DIR) + "/" + name; }

inline Fixture load_fixture(const std::string& name) {
  auto doc = load_graph_document(read_file(fixture_path(name)));
  Fixture f{std::get<DirectedGraph>(std::move(doc.graph)), {}, {}};
  f.source = doc.source ? f.graph.make_set(*doc.source) : f.graph.empty_set();
  f.target = doc.target ? f.graph.make_set(*doc.target) : f.graph.empty_set();
  return f;
}

}  // namespace walkmine::testing
