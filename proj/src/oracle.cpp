#include "walkmine/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace walkmine {

namespace {

std::vector<std::vector<VertexId>> adjacency_from_edges(const DirectedGraph& g) {
  std::vector<std::vector<VertexId>> out(g.vertex_count());
  for (const auto& [u, v] : g.edges()) out[u].push_back(v);
  return out;
}

bool has_color(const DirectedGraph& g, VertexId v, ColorId c) {
  const auto& value = g.features(v)[g.color_dimension()];
  return value.is_category() && value.as_category() == c;
}

Classification classify_endpoints(const std::vector<std::vector<VertexId>>& adj, const EndpointTrace& trace,
                                  const VertexSet& t, const StepFilter& accept) {
  Classification out;
  const std::size_t n = trace.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    bool stuck = false;
    for (auto v : trace[i].to_vector()) {
      bool moves = false;
      for (auto w : adj[v]) moves = moves || accept(w, i);
      stuck = stuck || !moves;
    }
    if (stuck) out.partial_halt_steps.push_back(i);
  }
  for (std::size_t i = 1; i <= n && !out.halt_step; ++i)
    if (trace[i].empty()) out.halt_step = i;
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

EndpointTrace endpoints(const std::vector<std::vector<VertexId>>& adj, std::size_t n, const VertexSet& s,
                        std::size_t steps, const StepFilter& accept) {
  EndpointTrace trace{s};
  for (std::size_t i = 0; i < steps; ++i) {
    std::set<VertexId> next;
    for (auto v : trace.back().to_vector())
      for (auto w : adj[v])
        if (accept(w, i)) next.insert(w);
    VertexSet e(n);
    for (auto w : next) e.insert(w);
    trace.push_back(std::move(e));
  }
  return trace;
}

}  // namespace

EndpointTrace reference_endpoints(const DirectedGraph& g, const VertexSet& s, std::size_t steps,
                                  const StepFilter& accept) {
  return endpoints(adjacency_from_edges(g), g.vertex_count(), s, steps, accept);
}

Classification reference_classify_scp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t,
                                      const ColorProgram& p) {
  const auto adj = adjacency_from_edges(g);
  StepFilter accept = [&](VertexId w, std::size_t i) { return has_color(g, w, p[i]); };
  return classify_endpoints(adj, endpoints(adj, g.vertex_count(), s, p.size(), accept), t, accept);
}

Classification reference_classify_stp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t,
                                      const TosetProgram& p) {
  const auto adj = adjacency_from_edges(g);
  StepFilter accept = [&](VertexId w, std::size_t i) { return reference_satisfies(g.schema(), g.features(w), p[i]); };
  return classify_endpoints(adj, endpoints(adj, g.vertex_count(), s, p.size(), accept), t, accept);
}

bool reference_satisfies(const FeatureSchema& schema, const FeatureVector& x, const Criterion& c) {
  if (c.kind() == Criterion::Kind::all) {
    for (const auto& part : c.parts())
      if (!reference_satisfies(schema, x, part)) return false;
    return true;
  }
  if (c.kind() == Criterion::Kind::any) {
    for (const auto& part : c.parts())
      if (reference_satisfies(schema, x, part)) return true;
    return false;
  }
  const auto& a = c.as_atom();
  const auto& v = x.at(a.dim);
  if (v.is_missing() || a.threshold.is_missing()) return a.op == CompareOp::eq && v == a.threshold;
  if (schema.dimension(a.dim).kind == FeatureKind::categorical) return a.op == CompareOp::eq && v == a.threshold;
  const double d = v.as_number() - a.threshold.as_number();
  switch (a.op) {
    case CompareOp::lt:
      return d < 0;
    case CompareOp::le:
      return d <= 0;
    case CompareOp::eq:
      return d == 0;
    case CompareOp::ge:
      return d >= 0;
    case CompareOp::gt:
      return d > 0;
  }
  return false;
}

OracleSets brute_force_mine_scp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t, std::size_t length,
                                std::size_t cap) {
  const std::size_t k = g.color_count();
  std::size_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (k != 0 && total > cap / k) throw std::length_error("brute_force_mine_scp: k^length exceeds the cap");
    total *= k;
  }
  if (total > cap) throw std::length_error("brute_force_mine_scp: k^length exceeds the cap");

  OracleSets out;
  ColorProgram p(length, 0);
  if (length > 0 && k == 0) return out;
  for (std::size_t index = 0; index < total; ++index) {
    std::size_t rest = index;
    for (std::size_t i = length; i-- > 0;) {
      p[i] = static_cast<ColorId>(rest % k);
      rest /= k;
    }
    const auto cls = reference_classify_scp(g, s, t, p);
    if (cls.is_exact()) out.exact.push_back(p);
    if (cls.is_feasible()) out.feasible.push_back(p);
  }
  return out;
}

std::vector<ColorProgram> walk_traces(const DirectedGraph& g, const VertexSet& s, const VertexSet& t,
                                      std::size_t length, std::size_t cap) {
  const auto adj = adjacency_from_edges(g);
  std::set<ColorProgram> traces;
  std::size_t explored = 0;
  ColorProgram trace;
  std::function<void(VertexId, std::size_t)> walk = [&](VertexId v, std::size_t depth) {
    if (++explored > cap) throw std::length_error("walk_traces: walk count exceeds the cap");
    if (depth == length) {
      if (t.contains(v)) traces.insert(trace);
      return;
    }
    for (auto w : adj[v]) {
      const auto& value = g.features(w)[g.color_dimension()];
      if (!value.is_category()) continue;
      trace.push_back(value.as_category());
      walk(w, depth + 1);
      trace.pop_back();
    }
  };
  for (auto v : s.to_vector()) walk(v, 0);
  return {traces.begin(), traces.end()};
}

std::vector<VertexSet> minimal_covers_bruteforce(const VertexSet& universe, const std::vector<VertexSet>& images,
                                                 const VertexSet& b) {
  const auto members = universe.to_vector();
  if (members.size() > 20) throw std::length_error("minimal_covers_bruteforce: universe larger than 20");
  const std::size_t n = members.size();
  std::vector<bool> is_cover(std::size_t{1} << n, false);
  for (std::size_t mask = 0; mask < is_cover.size(); ++mask) {
    VertexSet covered(b.universe());
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) covered |= images.at(members[i]);
    is_cover[mask] = b.is_subset_of(covered);
  }
  std::vector<VertexSet> out;
  for (std::size_t mask = 0; mask < is_cover.size(); ++mask) {
    if (!is_cover[mask]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i)
      if ((mask >> i & 1) && is_cover[mask & ~(std::size_t{1} << i)]) minimal = false;
    if (!minimal) continue;
    VertexSet cover(universe.universe());
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) cover.insert(members[i]);
    out.push_back(std::move(cover));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<WalkTrace> extract_walk(const DirectedGraph& g, const VertexSet& s, const VertexSet& t,
                                      const ColorProgram& p) {
  const auto adj = adjacency_from_edges(g);
  StepFilter accept = [&](VertexId w, std::size_t i) { return has_color(g, w, p[i]); };
  const auto trace = endpoints(adj, g.vertex_count(), s, p.size(), accept);
  const auto& last = trace.back();
  if (last.empty() || !last.is_subset_of(t)) return std::nullopt;

  WalkTrace walk;
  walk.vertices.assign(p.size() + 1, 0);
  walk.vertices[p.size()] = last.first();
  for (std::size_t i = p.size(); i-- > 0;) {
    const VertexId next = walk.vertices[i + 1];
    bool found = false;
    for (auto v : trace[i].to_vector()) {
      if (std::find(adj[v].begin(), adj[v].end(), next) != adj[v].end()) {
        walk.vertices[i] = v;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return walk;
}

}  // namespace walkmine
