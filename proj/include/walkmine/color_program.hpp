#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walkmine/graph.hpp"

namespace walkmine {

/// Sequence of colour ids; empty is the program of length zero.
using ColorProgram = std::vector<ColorId>;

/// E^0..E^n: the vertex sets occupied after each step.
using EndpointTrace = std::vector<VertexSet>;

enum class Verdict { exact, feasible, infeasible, complete_halt };

/// Outcome of running a program from S against target T. `exact` implies
/// feasibility; `halt_step` is the first i >= 1 with E^i empty and is set
/// exactly when the verdict is complete_halt. `partial_halt_steps` lists
/// every i < n at which some v in E^i has no out-neighbour accepted by the
/// next instruction.
struct Classification {
  Verdict verdict = Verdict::infeasible;
  std::optional<std::size_t> halt_step;
  std::vector<std::size_t> partial_halt_steps;

  bool is_exact() const { return verdict == Verdict::exact; }
  bool is_feasible() const { return verdict == Verdict::exact || verdict == Verdict::feasible; }
  bool partially_halts() const { return !partial_halt_steps.empty(); }
};

std::string_view to_string(Verdict v);
/// "Exact", "CompleteHalt(1)", "Exact, partial halt at {2}", ...
std::string describe(const Classification& c);

/// Throws std::invalid_argument if S is empty.
EndpointTrace simulate_scp(const DirectedGraph& g, const VertexSet& s, const ColorProgram& p);
Classification classify_scp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t, const ColorProgram& p);
/// Shared classification logic once the trace is known; `has_successor(v, i)`
/// reports whether v has an out-neighbour accepted by instruction i+1.
template <class HasSuccessor>
Classification classify_trace(const EndpointTrace& trace, const VertexSet& t, HasSuccessor&& has_successor);

/// C_c(N_o(A)).
VertexSet color_image(const DirectedGraph& g, const VertexSet& a, ColorId c);

bool covers(const DirectedGraph& g, const VertexSet& a, const VertexSet& b, ColorId c);
bool injects(const DirectedGraph& g, const VertexSet& a, const VertexSet& b, ColorId c);
bool outspans(const DirectedGraph& g, const VertexSet& a, const VertexSet& b, ColorId c);
bool spans(const DirectedGraph& g, const VertexSet& a, const VertexSet& b, ColorId c);

/// "red·green", or "ε" for the empty program.
std::string format_program(const DirectedGraph& g, const ColorProgram& p);
/// Parses colour names separated by ',', '·' or whitespace. Throws InputError
/// for unknown colours.
ColorProgram parse_color_program(const DirectedGraph& g, std::string_view text);
std::vector<std::string> color_names(const DirectedGraph& g, const ColorProgram& p);

template <class HasSuccessor>
Classification classify_trace(const EndpointTrace& trace, const VertexSet& t, HasSuccessor&& has_successor) {
  Classification out;
  const std::size_t n = trace.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto v : trace[i]) {
      if (!has_successor(v, i)) {
        out.partial_halt_steps.push_back(i);
        break;
      }
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (trace[i].empty()) {
      out.halt_step = i;
      break;
    }
  }
  const auto& last = trace.back();
  if (last.empty()) {
    out.verdict = Verdict::complete_halt;
  } else if (last == t) {
    out.verdict = Verdict::exact;
  } else if (last.is_subset_of(t)) {
    out.verdict = Verdict::feasible;
  } else {
    out.verdict = Verdict::infeasible;
  }
  return out;
}

}  // namespace walkmine
