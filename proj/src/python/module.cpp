#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "walkmine/cli.hpp"
#include "walkmine/error.hpp"
#include "walkmine/generator.hpp"
#include "walkmine/graph_io.hpp"
#include "walkmine/report.hpp"

namespace py = pybind11;

namespace walkmine {
namespace {

struct PyGraph {
  DirectedGraph graph;
  std::vector<std::string> source;
  std::vector<std::string> target;
};

PyGraph load(const std::string& text, const std::optional<std::string>& color_dim) {
  LoadOptions options;
  options.color_dimension = color_dim;
  auto doc = load_graph_document(text, options);
  if (!std::holds_alternative<DirectedGraph>(doc.graph))
    throw InputError("graph has edge features or parallel edges; convert it to a simple graph first");
  return {std::get<DirectedGraph>(std::move(doc.graph)), doc.source.value_or(std::vector<std::string>{}),
          doc.target.value_or(std::vector<std::string>{})};
}

std::vector<std::vector<std::string>> trace_names(const DirectedGraph& g, const EndpointTrace& trace) {
  std::vector<std::vector<std::string>> out;
  for (const auto& e : trace) {
    auto& names = out.emplace_back();
    for (auto v : e) names.push_back(g.name(v));
  }
  return out;
}

std::string mine(const PyGraph& pg, const std::vector<std::string>& source, const std::vector<std::string>& target,
                 const std::string& engine, const std::string& mode, std::size_t max_len, const std::string& fidelity) {
  const auto& g = pg.graph;
  const auto s = g.make_set(source.empty() ? pg.source : source);
  const auto t = g.make_set(target.empty() ? pg.target : target);
  MiningConfig config;
  config.max_len = max_len;
  config.fidelity = fidelity == "literal" ? Fidelity::literal : Fidelity::repaired;
  const auto m = mode == "feasible" ? MiningMode::feasible : MiningMode::exact;
  ojson out = ojson::array();
  if (engine == "stp") {
    for (const auto& r : mine_stp(g, s, t, m, config)) out.push_back(report_to_json(g, r));
  } else {
    for (const auto& r : mine_scp(g, s, t, m, config)) out.push_back(report_to_json(g, "scp", r));
  }
  return out.dump();
}

}  // namespace
}  // namespace walkmine

PYBIND11_MODULE(_walkmine, m) {
  using namespace walkmine;
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<PyGraph>(m, "Graph")
      .def_static("from_json", &load, py::arg("text"), py::arg("color_dim") = std::nullopt)
      .def_property_readonly("vertices", [](const PyGraph& g) { return g.graph.names(); })
      .def_property_readonly("edge_count", [](const PyGraph& g) { return g.graph.edge_count(); })
      .def_readonly("source", &PyGraph::source)
      .def_readonly("target", &PyGraph::target)
      .def("_mine", &mine)
      .def("simulate",
           [](const PyGraph& pg, const std::vector<std::string>& source, const std::vector<std::string>& program) {
             const auto& g = pg.graph;
             ColorProgram p;
             for (const auto& c : program) {
               auto id = g.find_color(c);
               if (!id) throw InputError("unknown colour '" + c + "'");
               p.push_back(*id);
             }
             return trace_names(g, simulate_scp(g, g.make_set(source), p));
           })
      .def("classify",
           [](const PyGraph& pg, const std::vector<std::string>& source, const std::vector<std::string>& target,
              const std::string& program) {
             const auto& g = pg.graph;
             return describe(classify_scp(g, g.make_set(source), g.make_set(target), parse_color_program(g, program)));
           })
      .def("to_json", [](const PyGraph& pg) { return to_graph_json(pg.graph); });

  m.def(
      "generate",
      [](std::uint64_t seed, bool color_only) {
        GeneratorOptions options;
        options.color_only = color_only;
        const auto inst = generate_instance(seed, options);
        return to_graph_json(inst.graph, SaveOptions{&inst.source, &inst.target});
      },
      py::arg("seed"), py::arg("color_only") = false);

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "walkmine");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
