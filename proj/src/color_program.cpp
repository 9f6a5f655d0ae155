#include "walkmine/color_program.hpp"

#include <cctype>
#include <stdexcept>

#include "walkmine/error.hpp"

namespace walkmine {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::exact:
      return "Exact";
    case Verdict::feasible:
      return "Feasible";
    case Verdict::infeasible:
      return "Infeasible";
    case Verdict::complete_halt:
      return "CompleteHalt";
  }
  return "?";
}

std::string describe(const Classification& c) {
  std::string out(to_string(c.verdict));
  if (c.verdict == Verdict::complete_halt && c.halt_step) out += "(" + std::to_string(*c.halt_step) + ")";
  if (c.partially_halts()) {
    out += ", partial halt at {";
    for (std::size_t i = 0; i < c.partial_halt_steps.size(); ++i)
      out += (i ? ", " : "") + std::to_string(c.partial_halt_steps[i]);
    out += "}";
  }
  return out;
}

EndpointTrace simulate_scp(const DirectedGraph& g, const VertexSet& s, const ColorProgram& p) {
  if (s.empty()) throw std::invalid_argument("simulate_scp: S must be nonempty");
  EndpointTrace trace;
  trace.reserve(p.size() + 1);
  trace.push_back(s);
  for (auto c : p) trace.push_back(color_image(g, trace.back(), c));
  return trace;
}

Classification classify_scp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t, const ColorProgram& p) {
  const auto trace = simulate_scp(g, s, p);
  return classify_trace(trace, t, [&](VertexId v, std::size_t i) {
    for (auto w : g.successors(v))
      if (g.color(w) == p[i]) return true;
    return false;
  });
}

VertexSet color_image(const DirectedGraph& g, const VertexSet& a, ColorId c) {
  if (c >= g.color_count()) return g.empty_set();
  const auto& cls = g.color_class(c);
  VertexSet out = g.empty_set();
  for (auto v : a)
    for (auto w : g.successors(v))
      if (cls.contains(w)) out.insert(w);
  return out;
}

bool covers(const DirectedGraph& g, const VertexSet& a, const VertexSet& b, ColorId c) {
  return b.is_subset_of(color_image(g, a, c));
}

bool injects(const DirectedGraph& g, const VertexSet& a, const VertexSet& b, ColorId c) {
  const auto image = color_image(g, a, c);
  return !image.empty() && image.is_subset_of(b);
}

bool outspans(const DirectedGraph& g, const VertexSet& a, const VertexSet& b, ColorId c) {
  return !color_image(g, a, c).is_subset_of(b);
}

bool spans(const DirectedGraph& g, const VertexSet& a, const VertexSet& b, ColorId c) {
  const auto image = color_image(g, a, c);
  return b.is_subset_of(image) && image.is_subset_of(b);
}

std::string format_program(const DirectedGraph& g, const ColorProgram& p) {
  if (p.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "·" : "") + g.color_name(p[i]);
  return out;
}

ColorProgram parse_color_program(const DirectedGraph& g, std::string_view text) {
  ColorProgram p;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (token != "ε") {
      auto c = g.find_color(token);
      if (!c) throw InputError("unknown colour '" + token + "'");
      p.push_back(*c);
    }
    token.clear();
  };
  const std::string_view dot = "·";
  for (std::size_t i = 0; i < text.size();) {
    if (text.substr(i, dot.size()) == dot) {
      flush();
      i += dot.size();
    } else if (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))) {
      flush();
      ++i;
    } else {
      token += text[i++];
    }
  }
  flush();
  return p;
}

std::vector<std::string> color_names(const DirectedGraph& g, const ColorProgram& p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (auto c : p) out.push_back(g.color_name(c));
  return out;
}

}  // namespace walkmine
