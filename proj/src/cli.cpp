#include "walkmine/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "walkmine/error.hpp"
#include "walkmine/generator.hpp"
#include "walkmine/graph_io.hpp"
#include "walkmine/oracle.hpp"
#include "walkmine/report.hpp"

namespace walkmine {

namespace {

constexpr int kFound = 0;
constexpr int kNotFound = 1;
constexpr int kInputError = 2;

struct GraphInputs {
  std::string graph_path;
  std::string source;
  std::string target;
  std::string color_dim;
};

struct MineOptions {
  GraphInputs in;
  std::string engine = "scp";
  std::string mode = "exact";
  std::size_t max_len = 4;
  std::optional<std::size_t> max_programs;
  std::optional<std::size_t> max_triples;
  std::optional<long long> time_budget_ms;
  std::string fidelity = "repaired";
  std::string output = "json";
  bool stp_safe_sets = false;
  std::size_t oracle_cap = default_oracle_cap;
};

struct ProgramOptions {
  GraphInputs in;
  std::string program;
  std::string engine = "scp";
  std::string expect;
  std::string output;
};

struct ConvertOptions {
  std::string graph_path;
  std::string out_path;
};

struct GenOptions {
  std::uint64_t seed = 0;
  std::string out_path;
  bool color_only = false;
  std::size_t max_vertices = 12;
  std::size_t max_colors = 4;
};

struct LoadedInputs {
  DirectedGraph graph;
  std::optional<VertexSet> source;
  std::optional<VertexSet> target;
};

bool is_file(const std::string& path) {
  std::error_code ec;
  return std::filesystem::is_regular_file(path, ec);
}

/// A file of newline-separated ids if `spec` names an existing file,
/// otherwise a comma-separated inline list.
VertexSet resolve_set(const DirectedGraph& g, const std::string& spec) {
  if (is_file(spec)) {
    try {
      return parse_vertex_set(g, read_file(spec));
    } catch (const InputError& e) {
      throw InputError(e.what(), spec);
    }
  }
  VertexSet s = g.empty_set();
  std::stringstream ss(spec);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (id.empty()) continue;
    auto v = g.find(id);
    if (!v) throw InputError("unknown vertex id '" + id + "'");
    s.insert(*v);
  }
  return s;
}

LoadedInputs load_inputs(const GraphInputs& in) {
  LoadOptions options;
  if (!in.color_dim.empty()) options.color_dimension = in.color_dim;
  auto doc = load_graph_document(read_file(in.graph_path), options);
  auto* g = std::get_if<DirectedGraph>(&doc.graph);
  if (!g)
    throw InputError("graph has edge features or parallel edges; run `walkmine convert` first", in.graph_path);
  LoadedInputs out{std::move(*g), std::nullopt, std::nullopt};
  if (!in.source.empty()) {
    out.source = resolve_set(out.graph, in.source);
  } else if (doc.source) {
    out.source = out.graph.make_set(*doc.source);
  }
  if (!in.target.empty()) {
    out.target = resolve_set(out.graph, in.target);
  } else if (doc.target) {
    out.target = out.graph.make_set(*doc.target);
  }
  return out;
}

const VertexSet& require_nonempty(const std::optional<VertexSet>& s, const char* what) {
  if (!s) throw InputError(std::string("no ") + what + " set given (use --" + what + " or a \"" + what + "\" list)");
  if (s->empty()) throw InputError(std::string(what) + " set is empty");
  return *s;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write file", path);
  file << text;
}

void add_graph_inputs(CLI::App* cmd, GraphInputs& in, bool with_target = true) {
  cmd->add_option("--graph", in.graph_path, "graph-json file")->required();
  cmd->add_option("--source", in.source, "source ids: a file of ids or a comma-separated list");
  if (with_target) cmd->add_option("--target", in.target, "target ids: a file of ids or a comma-separated list");
  cmd->add_option("--color-dim", in.color_dim, "categorical dimension used as the colour");
}

MiningConfig make_config(const MineOptions& o) {
  MiningConfig config;
  config.max_len = o.max_len;
  config.max_programs = o.max_programs;
  config.max_triples = o.max_triples;
  if (o.time_budget_ms) config.time_budget = std::chrono::milliseconds(*o.time_budget_ms);
  config.fidelity = o.fidelity == "literal" ? Fidelity::literal : Fidelity::repaired;
  config.stp_safe_sets = o.stp_safe_sets;
  return config;
}

std::string text_line(const DirectedGraph& g, const ScpReport& r, std::string_view engine) {
  std::string line = std::string(engine) + " " + std::string(to_string(r.mode)) + " length " +
                     std::to_string(r.length) + (r.exhausted ? "" : " (incomplete)") + ":";
  if (r.programs.empty()) return line + " none\n";
  line += "\n";
  for (const auto& p : r.programs) line += "  " + format_program(g, p) + "\n";
  return line;
}

std::string text_line(const DirectedGraph& g, const StpReport& r) {
  std::string line = "stp " + std::string(to_string(r.mode)) + " length " + std::to_string(r.length) +
                     (r.exhausted ? "" : " (incomplete)") + ":";
  if (r.programs.empty()) return line + " none\n";
  line += "\n";
  for (const auto& p : r.programs) line += "  " + describe(g.schema(), p) + "\n";
  return line;
}

std::vector<ScpReport> run_oracle(const DirectedGraph& g, const VertexSet& s, const VertexSet& t, MiningMode mode,
                                  const MineOptions& o, const LevelCallback<ColorProgram>& on_level) {
  std::vector<ScpReport> reports;
  for (std::size_t length = 0; length <= o.max_len; ++length) {
    ScpReport r;
    r.mode = mode;
    r.length = length;
    try {
      auto sets = brute_force_mine_scp(g, s, t, length, o.oracle_cap);
      r.programs = mode == MiningMode::exact ? sets.exact : sets.feasible;
    } catch (const std::length_error&) {
      r.exhausted = false;
    }
    on_level(r);
    reports.push_back(std::move(r));
    if (!reports.back().exhausted) break;
  }
  return reports;
}

int cmd_mine(const MineOptions& o, std::ostream& out) {
  auto in = load_inputs(o.in);
  const auto& g = in.graph;
  const auto& s = require_nonempty(in.source, "source");
  const auto& t = require_nonempty(in.target, "target");
  if (o.engine != "stp" && !g.has_color())
    throw InputError("graph has no colour dimension; pass --color-dim or use --engine stp");
  const auto mode = o.mode == "exact" ? MiningMode::exact : MiningMode::feasible;
  const auto config = make_config(o);

  bool any = false;
  std::optional<EndpointTrace> first_trace;
  auto emit_scp = [&](const ScpReport& r) {
    any = any || !r.programs.empty();
    if (!first_trace && !r.programs.empty()) first_trace = simulate_scp(g, s, r.programs.front());
    if (o.output == "json") out << report_to_json(g, o.engine, r).dump() << "\n" << std::flush;
    if (o.output == "text") out << text_line(g, r, o.engine) << std::flush;
  };
  auto emit_stp = [&](const StpReport& r) {
    any = any || !r.programs.empty();
    if (!first_trace && !r.programs.empty()) first_trace = simulate_stp(g, s, r.programs.front());
    if (o.output == "json") out << report_to_json(g, r).dump() << "\n" << std::flush;
    if (o.output == "text") out << text_line(g, r) << std::flush;
  };

  if (o.engine == "stp") {
    mine_stp(g, s, t, mode, config, emit_stp);
  } else if (o.engine == "oracle") {
    run_oracle(g, s, t, mode, o, emit_scp);
  } else {
    mine_scp(g, s, t, mode, config, emit_scp);
  }
  if (o.output == "dot") {
    // The shortest program found (first in canonical order) is drawn.
    out << to_dot(g, DotOptions{&s, &t, first_trace ? &*first_trace : nullptr});
  }
  return any ? kFound : kNotFound;
}

struct ProgramRun {
  EndpointTrace trace;
  std::optional<Classification> cls;
  ojson program;
  std::string rendered;
};

ProgramRun run_program(const ProgramOptions& o, const LoadedInputs& in, bool need_target) {
  const auto& g = in.graph;
  const auto& s = require_nonempty(in.source, "source");
  const std::string text = is_file(o.program) ? read_file(o.program) : o.program;
  ProgramRun run;
  if (o.engine == "stp") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("program is not valid JSON: ") + e.what());
    }
    const auto p = toset_program_from_json(g.schema(), j);
    run.trace = simulate_stp(g, s, p);
    if (need_target || in.target) run.cls = classify_stp(g, s, require_nonempty(in.target, "target"), p);
    run.program = toset_program_to_json(g.schema(), p);
    run.rendered = describe(g.schema(), p);
  } else {
    if (!g.has_color()) throw InputError("graph has no colour dimension; pass --color-dim");
    ColorProgram p;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("program is not valid JSON: ") + e.what());
      }
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) throw InputError("colour must be a string", "$[" + std::to_string(i) + "]");
        auto c = g.find_color(j[i].get<std::string>());
        if (!c) throw InputError("unknown colour '" + j[i].get<std::string>() + "'", "$[" + std::to_string(i) + "]");
        p.push_back(*c);
      }
    } else {
      p = parse_color_program(g, text);
    }
    run.trace = simulate_scp(g, s, p);
    if (need_target || in.target) run.cls = classify_scp(g, s, require_nonempty(in.target, "target"), p);
    run.program = color_program_to_json(g, p);
    run.rendered = format_program(g, p);
  }
  return run;
}

bool matches(const Classification& c, const std::string& expect) {
  if (expect == "exact") return c.is_exact();
  if (expect == "feasible") return c.is_feasible();
  if (expect == "infeasible") return c.verdict == Verdict::infeasible;
  return c.verdict == Verdict::complete_halt;
}

int cmd_verify(const ProgramOptions& o, std::ostream& out) {
  const auto in = load_inputs(o.in);
  const auto run = run_program(o, in, true);
  const auto& g = in.graph;
  if (o.output == "json") {
    ojson j = ojson::object();
    j["program"] = run.program;
    j["classification"] = classification_to_json(*run.cls);
    j["trace"] = trace_to_json(g, run.trace);
    out << j.dump() << "\n";
  } else {
    out << "program: " << run.rendered << "\n";
    out << "classification: " << describe(*run.cls) << "\n";
    for (std::size_t i = 0; i < run.trace.size(); ++i) out << "E" << i << " = " << describe(g, run.trace[i]) << "\n";
  }
  if (o.expect.empty()) return 0;
  return matches(*run.cls, o.expect) ? 0 : 1;
}

int cmd_simulate(const ProgramOptions& o, std::ostream& out) {
  const auto in = load_inputs(o.in);
  const auto run = run_program(o, in, false);
  const auto& g = in.graph;
  if (o.output == "dot") {
    out << to_dot(g, DotOptions{&*in.source, in.target ? &*in.target : nullptr, &run.trace});
    return 0;
  }
  ojson j = ojson::object();
  j["program"] = run.program;
  j["trace"] = trace_to_json(g, run.trace);
  if (run.cls) j["classification"] = classification_to_json(*run.cls);
  out << j.dump() << "\n";
  return 0;
}

int cmd_convert(const ConvertOptions& o, std::ostream& out) {
  auto doc = load_graph_document(read_file(o.graph_path));
  auto g = std::holds_alternative<MultiGraph>(doc.graph) ? convert_multigraph(std::get<MultiGraph>(doc.graph))
                                                          : std::move(std::get<DirectedGraph>(doc.graph));
  std::optional<VertexSet> s, t;
  if (doc.source) s = g.make_set(*doc.source);
  if (doc.target) t = g.make_set(*doc.target);
  write_output(o.out_path, to_graph_json(g, SaveOptions{s ? &*s : nullptr, t ? &*t : nullptr}), out);
  return 0;
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
  GeneratorOptions options;
  options.color_only = o.color_only;
  options.max_vertices = o.max_vertices;
  options.max_colors = o.max_colors;
  const auto inst = generate_instance(o.seed, options);
  write_output(o.out_path, to_graph_json(inst.graph, SaveOptions{&inst.source, &inst.target}), out);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mine deterministic graph-walking programs", "walkmine"};
  app.require_subcommand(1);

  MineOptions mine;
  auto* mine_cmd = app.add_subcommand("mine", "mine programs leading from S to T");
  add_graph_inputs(mine_cmd, mine.in);
  mine_cmd->add_option("--engine", mine.engine)->check(CLI::IsMember({"scp", "stp", "oracle"}));
  mine_cmd->add_option("--mode", mine.mode)->check(CLI::IsMember({"exact", "feasible"}));
  mine_cmd->add_option("--max-len", mine.max_len, "longest program length searched");
  mine_cmd->add_option("--max-programs", mine.max_programs);
  mine_cmd->add_option("--max-triples", mine.max_triples);
  mine_cmd->add_option("--time-budget-ms", mine.time_budget_ms)->check(CLI::NonNegativeNumber);
  mine_cmd->add_option("--fidelity", mine.fidelity)->check(CLI::IsMember({"repaired", "literal"}));
  mine_cmd->add_option("--output", mine.output)->check(CLI::IsMember({"json", "text", "dot"}));
  mine_cmd->add_flag("--stp-safe-sets", mine.stp_safe_sets);
  mine_cmd->add_option("--oracle-cap", mine.oracle_cap, "largest number of programs the oracle may simulate");

  ProgramOptions verify;
  verify.output = "text";
  auto* verify_cmd = app.add_subcommand("verify", "classify a program and print its endpoint trace");
  add_graph_inputs(verify_cmd, verify.in);
  verify_cmd->add_option("--program", verify.program, "program file or inline colour list")->required();
  verify_cmd->add_option("--engine", verify.engine)->check(CLI::IsMember({"scp", "stp"}));
  verify_cmd->add_option("--expect", verify.expect)
      ->check(CLI::IsMember({"exact", "feasible", "infeasible", "halt"}));
  verify_cmd->add_option("--output", verify.output)->check(CLI::IsMember({"json", "text"}));

  ProgramOptions simulate;
  simulate.output = "json";
  auto* simulate_cmd = app.add_subcommand("simulate", "print a program's endpoint trace");
  add_graph_inputs(simulate_cmd, simulate.in);
  simulate_cmd->add_option("--program", simulate.program, "program file or inline colour list")->required();
  simulate_cmd->add_option("--engine", simulate.engine)->check(CLI::IsMember({"scp", "stp"}));
  simulate_cmd->add_option("--output", simulate.output)->check(CLI::IsMember({"json", "dot"}));

  ConvertOptions convert;
  auto* convert_cmd = app.add_subcommand("convert", "subdivide edges of a multigraph into a simple graph");
  convert_cmd->add_option("--graph", convert.graph_path)->required();
  convert_cmd->add_option("-o,--out", convert.out_path, "output file (stdout if omitted)");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a seeded random instance with planted S and T");
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("-o,--out", gen.out_path, "output file (stdout if omitted)");
  gen_cmd->add_flag("--color-only", gen.color_only);
  gen_cmd->add_option("--max-vertices", gen.max_vertices)->check(CLI::Range(1, 64));
  gen_cmd->add_option("--max-colors", gen.max_colors)->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (mine_cmd->parsed()) return cmd_mine(mine, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (simulate_cmd->parsed()) return cmd_simulate(simulate, out);
    if (convert_cmd->parsed()) return cmd_convert(convert, out);
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace walkmine
