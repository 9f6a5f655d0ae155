#include "walkmine/scp_miner.hpp"

#include <deque>
#include <set>
#include <stdexcept>

#include "walkmine/pseudo_basis.hpp"

namespace walkmine {

std::string_view to_string(MiningMode m) { return m == MiningMode::exact ? "exact" : "feasible"; }
std::string_view to_string(Fidelity f) { return f == Fidelity::repaired ? "repaired" : "literal"; }

namespace {

VertexSet singleton(const DirectedGraph& g, VertexId v) {
  VertexSet s = g.empty_set();
  s.insert(v);
  return s;
}

/// The single colour of `b`, if every member carries the same colour.
std::optional<ColorId> monochrome(const DirectedGraph& g, const VertexSet& b) {
  std::optional<ColorId> out;
  for (auto v : b) {
    auto c = g.color(v);
    if (!c || (out && *out != *c)) return std::nullopt;
    out = c;
  }
  return out;
}

/// Members v of `candidates` with C_c(N_o(v)) ⊆ m.
VertexSet safe_subset(const DirectedGraph& g, const VertexSet& candidates, ColorId c, const VertexSet& m) {
  const auto& cls = g.color_class(c);
  VertexSet out = g.empty_set();
  for (auto v : candidates) {
    bool safe = true;
    for (auto w : g.successors(v)) {
      if (cls.contains(w) && !m.contains(w)) {
        safe = false;
        break;
      }
    }
    if (safe) out.insert(v);
  }
  return out;
}

bool has_color_image(const DirectedGraph& g, VertexId v, ColorId c) {
  for (auto w : g.successors(v))
    if (g.color(w) == c) return true;
  return false;
}

bool accepted_by_mode(const Classification& cls, MiningMode mode) {
  return mode == MiningMode::exact ? cls.is_exact() : cls.is_feasible();
}

/// Safe-set backward search for one program length.
class RepairedLevelSearch {
 public:
  RepairedLevelSearch(const DirectedGraph& g, const VertexSet& s, const VertexSet& t,
                      const std::vector<VertexSet>& levels, std::size_t length, MiningMode mode, SearchBudget& budget,
                      SearchStats& stats)
      : g_(g), s_(s), t_(t), levels_(levels), length_(length), mode_(mode), budget_(budget), stats_(stats) {}

  /// Returns false if the budget ran out.
  bool run(std::set<ColorProgram>& programs) {
    std::set<SearchTriple> frontier;
    if (mode_ == MiningMode::exact) {
      frontier.insert(SearchTriple{{}, t_, t_});
    } else {
      seed_feasible(frontier);
    }
    while (!frontier.empty() && frontier.begin()->level() < length_) {
      std::set<SearchTriple> next;
      for (const auto& triple : frontier) {
        if (!budget_.charge_triple()) return false;
        ++stats_.triples_expanded;
        expand(triple, next);
      }
      frontier = std::move(next);
    }
    for (const auto& triple : frontier) {
      if (!budget_.charge_triple()) return false;
      if (!(triple.b.is_subset_of(s_) && s_.is_subset_of(triple.m))) continue;
      if (accepted_by_mode(classify_scp(g_, s_, t_, triple.suffix), mode_)) {
        if (programs.insert(triple.suffix).second) budget_.add_programs(1);
      } else {
        ++stats_.rejected_by_simulation;
      }
    }
    return true;
  }

 private:
  // Safe set for a set that sits `level` steps from S and is followed by c.
  // Intermediate endpoint sets are monochromatic, so the set is restricted to
  // one colour class d; the S level has no colour restriction.
  template <class F>
  void for_each_safe_set(std::size_t level, ColorId c, const VertexSet& m, const VertexSet& restrict_to, F&& f) {
    if (level == 0) {
      auto safe = safe_subset(g_, s_, c, m);
      if (safe == s_) f(std::move(safe));
      return;
    }
    for (auto d : colors_of(g_, levels_[level] & restrict_to))
      f(safe_subset(g_, levels_[level] & g_.color_class(d), c, m));
  }

  void seed_feasible(std::set<SearchTriple>& frontier) {
    const std::size_t level = length_ - 1;
    for (ColorId c = 0; c < g_.color_count(); ++c) {
      auto parents = in_neighbors(g_, t_ & g_.color_class(c));
      for_each_safe_set(level, c, t_, parents, [&](VertexSet m) {
        for (auto v : m) {
          if (!has_color_image(g_, v, c)) continue;
          frontier.insert(SearchTriple{{c}, singleton(g_, v), m});
          // At the S level acceptance only depends on M, one seed is enough.
          if (level == 0) break;
        }
      });
    }
  }

  void expand(const SearchTriple& triple, std::set<SearchTriple>& next) {
    auto c = monochrome(g_, triple.b);
    if (!c) return;
    const std::size_t level = length_ - triple.level() - 1;
    const auto parents = in_neighbors(g_, triple.b);
    for_each_safe_set(level, *c, triple.m, parents, [&](VertexSet m) {
      const auto pool = m & parents;
      const std::size_t limit = level == 0 ? 1 : std::numeric_limits<std::size_t>::max();
      for (auto& basis : enumerate_pseudo_bases(g_, pool, triple.b, triple.m, *c, limit)) {
        ++stats_.pseudo_bases;
        SearchTriple extended;
        extended.suffix.reserve(triple.suffix.size() + 1);
        extended.suffix.push_back(*c);
        extended.suffix.insert(extended.suffix.end(), triple.suffix.begin(), triple.suffix.end());
        extended.b = std::move(basis);
        extended.m = m;
        if (!next.insert(std::move(extended)).second) ++stats_.dedup_hits;
      }
    });
  }

  const DirectedGraph& g_;
  const VertexSet& s_;
  const VertexSet& t_;
  const std::vector<VertexSet>& levels_;
  std::size_t length_;
  MiningMode mode_;
  SearchBudget& budget_;
  SearchStats& stats_;
};

/// The original pseudocode: one queue carried across lengths, pool
/// N_o^{l-n-1}(S) ∩ N_i(B), acceptance B ⊆ S ⊆ N_i(E_{p≤1}(B)) without a
/// simulation check.
class LiteralSession {
 public:
  LiteralSession(const DirectedGraph& g, const VertexSet& s, const VertexSet& t, const std::vector<VertexSet>& levels,
                 MiningMode mode, SearchBudget& budget)
      : g_(g), s_(s), t_(t), levels_(levels), mode_(mode), budget_(budget) {
    next_.push_back(SearchTriple{{}, t, t});
  }

  bool run_length(std::size_t length, std::set<ColorProgram>& programs, SearchStats& stats) {
    std::deque<SearchTriple> queue;
    queue.swap(next_);
    std::set<SearchTriple> seen;
    while (!queue.empty()) {
      if (!budget_.charge_triple()) return false;
      auto triple = std::move(queue.front());
      queue.pop_front();
      const std::size_t n = triple.level();
      if (n == length) {
        if (n > 0 && triple.b.is_subset_of(s_)) {
          auto first = color_image(g_, triple.b, triple.suffix.front());
          if (s_.is_subset_of(in_neighbors(g_, first)) && programs.insert(triple.suffix).second)
            budget_.add_programs(1);
        }
        next_.push_back(std::move(triple));
        continue;
      }
      ++stats.triples_expanded;
      const auto parents = in_neighbors(g_, triple.b);
      const auto pool = levels_[length - n - 1] & parents;
      for (auto c : colors_of(g_, triple.b)) {
        for (auto d : colors_of(g_, pool)) {
          const VertexSet nd = length != n + 1 ? pool & g_.color_class(d) : pool;
          std::vector<VertexSet> bases;
          if (n == 0 && mode_ == MiningMode::feasible) {
            for (auto v : nd) {
              auto image = color_image(g_, singleton(g_, v), c);
              if (!image.empty() && image.is_subset_of(t_)) bases.push_back(singleton(g_, v));
            }
          } else {
            bases = enumerate_pseudo_bases(g_, nd, triple.b, triple.m, c);
          }
          for (auto& basis : bases) {
            ++stats.pseudo_bases;
            SearchTriple extended;
            extended.suffix.push_back(c);
            extended.suffix.insert(extended.suffix.end(), triple.suffix.begin(), triple.suffix.end());
            extended.b = std::move(basis);
            extended.m = nd;
            if (seen.insert(extended).second) {
              queue.push_back(std::move(extended));
            } else {
              ++stats.dedup_hits;
            }
          }
        }
      }
    }
    return true;
  }

 private:
  const DirectedGraph& g_;
  const VertexSet& s_;
  const VertexSet& t_;
  const std::vector<VertexSet>& levels_;
  MiningMode mode_;
  SearchBudget& budget_;
  std::deque<SearchTriple> next_;
};

}  // namespace

std::vector<ScpReport> mine_scp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t, MiningMode mode,
                                const MiningConfig& config, const LevelCallback<ColorProgram>& on_level) {
  if (s.empty() || t.empty()) throw std::invalid_argument("mine_scp: S and T must be nonempty");
  if (!g.has_color()) throw std::invalid_argument("mine_scp: graph has no colour dimension");

  const auto levels = forward_levels(g, s, config.max_len);
  SearchBudget budget(config);
  std::optional<LiteralSession> literal;
  if (config.fidelity == Fidelity::literal) literal.emplace(g, s, t, levels, mode, budget);

  std::vector<ScpReport> reports;
  for (std::size_t length = 0; length <= config.max_len; ++length) {
    ScpReport report;
    report.mode = mode;
    report.length = length;
    std::set<ColorProgram> programs;

    if (length == 0) {
      if (mode == MiningMode::exact ? s == t : s.is_subset_of(t)) programs.insert(ColorProgram{});
    } else {
      const bool reachable = mode == MiningMode::exact ? t.is_subset_of(levels[length]) : t.intersects(levels[length]);
      if (literal) {
        // The pseudocode only visits lengths with T ⊆ N_o^l(S), in both modes.
        if (t.is_subset_of(levels[length])) report.exhausted = literal->run_length(length, programs, report.stats);
      } else if (reachable) {
        RepairedLevelSearch search(g, s, t, levels, length, mode, budget, report.stats);
        report.exhausted = search.run(programs);
      }
    }
    report.programs.assign(programs.begin(), programs.end());
    if (on_level) on_level(report);
    reports.push_back(std::move(report));
    if (!reports.back().exhausted || budget.over()) break;
  }
  return reports;
}

}  // namespace walkmine
