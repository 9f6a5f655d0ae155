#include "walkmine/report.hpp"

#include <cmath>

#include "walkmine/error.hpp"

namespace walkmine {

namespace {

ojson value_to_json(const FeatureSchema& schema, std::size_t dim, const FeatureValue& v) {
  if (v.is_missing()) return nullptr;
  if (v.is_category()) return schema.category_name(dim, v.as_category());
  return v.as_number();
}

FeatureValue value_from_json(const FeatureSchema& schema, std::size_t dim, const nlohmann::json& v,
                             const std::string& where) {
  if (v.is_null()) return FeatureValue::missing();
  const auto& d = schema.dimension(dim);
  if (d.kind == FeatureKind::categorical) {
    if (!v.is_string()) throw InputError("categorical threshold for '" + d.name + "' must be a string", where);
    auto id = schema.find_category(dim, v.get<std::string>());
    if (!id) throw InputError("unknown value '" + v.get<std::string>() + "' for '" + d.name + "'", where);
    return FeatureValue::category(*id);
  }
  if (!v.is_number() || v.is_boolean()) throw InputError("threshold for '" + d.name + "' must be a number", where);
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InputError("threshold for '" + d.name + "' must be finite", where);
  return FeatureValue::number(x);
}

ojson set_to_json(const DirectedGraph& g, const VertexSet& s) {
  ojson out = ojson::array();
  for (auto v : s) out.push_back(g.name(v));
  return out;
}

}  // namespace

ojson criterion_to_json(const FeatureSchema& schema, const Criterion& c) {
  if (c.kind() == Criterion::Kind::atom) {
    const auto& a = c.as_atom();
    ojson atom = ojson::object();
    atom["f"] = schema.dimension(a.dim).name;
    atom["op"] = std::string(to_string(a.op));
    atom["v"] = value_to_json(schema, a.dim, a.threshold);
    return ojson{{"atom", std::move(atom)}};
  }
  ojson parts = ojson::array();
  for (const auto& part : c.parts()) parts.push_back(criterion_to_json(schema, part));
  return ojson{{c.kind() == Criterion::Kind::all ? "all" : "any", std::move(parts)}};
}

Criterion criterion_from_json(const FeatureSchema& schema, const nlohmann::json& j, const std::string& where) {
  if (!j.is_object() || j.size() != 1)
    throw InputError("criterion must be an object with exactly one of \"atom\", \"all\", \"any\"", where);
  const std::string key = j.begin().key();
  const auto& body = j.begin().value();
  if (key == "atom") {
    const auto at = where + ".atom";
    if (!body.is_object() || !body.contains("f") || !body.contains("op"))
      throw InputError("atom needs \"f\" and \"op\"", at);
    if (!body["f"].is_string() || !body["op"].is_string()) throw InputError("\"f\" and \"op\" must be strings", at);
    const auto dim = schema.find(body["f"].get<std::string>());
    if (!dim) throw InputError("unknown feature '" + body["f"].get<std::string>() + "'", at + ".f");
    CompareOp op;
    try {
      op = parse_compare_op(body["op"].get<std::string>());
    } catch (const InputError& e) {
      throw InputError(e.what(), at + ".op");
    }
    const auto threshold = value_from_json(schema, *dim, body.value("v", nlohmann::json()), at + ".v");
    auto c = Criterion::atom(*dim, op, threshold);
    try {
      validate(schema, c);
    } catch (const InputError& e) {
      throw InputError(e.what(), at);
    }
    return c;
  }
  if (key != "all" && key != "any") throw InputError("unknown criterion kind \"" + key + "\"", where);
  const auto at = where + "." + key;
  if (!body.is_array() || body.empty()) throw InputError("\"" + key + "\" must be a nonempty array", at);
  std::vector<Criterion> parts;
  for (std::size_t i = 0; i < body.size(); ++i)
    parts.push_back(criterion_from_json(schema, body[i], at + "[" + std::to_string(i) + "]"));
  return key == "all" ? Criterion::all(std::move(parts)) : Criterion::any(std::move(parts));
}

TosetProgram toset_program_from_json(const FeatureSchema& schema, const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("toset program must be a JSON array of criteria", "$");
  TosetProgram p;
  for (std::size_t i = 0; i < j.size(); ++i) p.push_back(criterion_from_json(schema, j[i], "$[" + std::to_string(i) + "]"));
  return p;
}

ojson color_program_to_json(const DirectedGraph& g, const ColorProgram& p) {
  ojson out = ojson::array();
  for (auto c : p) out.push_back(g.color_name(c));
  return out;
}

ojson toset_program_to_json(const FeatureSchema& schema, const TosetProgram& p) {
  ojson out = ojson::array();
  for (const auto& c : p) out.push_back(criterion_to_json(schema, c));
  return out;
}

ojson trace_to_json(const DirectedGraph& g, const EndpointTrace& trace) {
  ojson out = ojson::array();
  for (const auto& e : trace) out.push_back(set_to_json(g, e));
  return out;
}

ojson classification_to_json(const Classification& c) {
  ojson out = ojson::object();
  out["verdict"] = std::string(to_string(c.verdict));
  out["halt_step"] = c.halt_step ? ojson(*c.halt_step) : ojson(nullptr);
  out["partial_halt_steps"] = c.partial_halt_steps;
  return out;
}

ojson stats_to_json(const SearchStats& stats) {
  ojson out = ojson::object();
  out["triples_expanded"] = stats.triples_expanded;
  out["pseudo_bases"] = stats.pseudo_bases;
  out["dedup_hits"] = stats.dedup_hits;
  out["rejected_by_simulation"] = stats.rejected_by_simulation;
  out["chains_accepted"] = stats.chains_accepted;
  out["criterion_failures"] = stats.criterion_failures;
  return out;
}

ojson report_to_json(const DirectedGraph& g, std::string_view engine, const ScpReport& r) {
  ojson out = ojson::object();
  out["engine"] = std::string(engine);
  out["mode"] = std::string(to_string(r.mode));
  out["length"] = r.length;
  out["exhausted"] = r.exhausted;
  ojson programs = ojson::array();
  for (const auto& p : r.programs) programs.push_back(color_program_to_json(g, p));
  out["programs"] = std::move(programs);
  out["stats"] = stats_to_json(r.stats);
  return out;
}

ojson report_to_json(const DirectedGraph& g, const StpReport& r) {
  ojson out = ojson::object();
  out["engine"] = "stp";
  out["mode"] = std::string(to_string(r.mode));
  out["length"] = r.length;
  out["exhausted"] = r.exhausted;
  ojson programs = ojson::array();
  for (const auto& p : r.programs) programs.push_back(toset_program_to_json(g.schema(), p));
  out["programs"] = std::move(programs);
  out["stats"] = stats_to_json(r.stats);
  return out;
}

}  // namespace walkmine
