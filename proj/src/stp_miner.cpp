#include "walkmine/stp_miner.hpp"

#include <deque>
#include <map>
#include <stdexcept>

#include "walkmine/pseudo_basis.hpp"

namespace walkmine {

namespace {

bool collides(const DirectedGraph& g, const VertexSet& b_side, const VertexSet& e_side) {
  std::vector<bool> seen(g.feature_class_count(), false);
  for (auto x : b_side) seen[g.feature_class(x)] = true;
  for (auto y : e_side)
    if (seen[g.feature_class(y)]) return true;
  return false;
}

std::vector<FeatureVector> features_of(const DirectedGraph& g, const VertexSet& a) {
  std::vector<FeatureVector> out;
  out.reserve(a.size());
  for (auto v : a) out.push_back(g.features(v));
  return out;
}

VertexSet successors_of(const DirectedGraph& g, VertexId v) {
  VertexSet out = g.empty_set();
  for (auto w : g.successors(v)) out.insert(w);
  return out;
}

class ChainSearch {
 public:
  ChainSearch(const DirectedGraph& g, const VertexSet& s, const std::vector<VertexSet>& levels, std::size_t length,
              const MiningConfig& config, SearchBudget& budget, SearchStats& stats)
      : g_(g), s_(s), levels_(levels), length_(length), config_(config), budget_(budget), stats_(stats) {}

  ChainSearchResult run(std::vector<BasisChain> seeds) {
    ChainSearchResult result;
    std::deque<BasisChain> queue(std::make_move_iterator(seeds.begin()), std::make_move_iterator(seeds.end()));
    while (!queue.empty()) {
      if (!budget_.charge_triple()) {
        result.exhausted = false;
        return result;
      }
      auto chain = std::move(queue.front());
      queue.pop_front();
      const auto& head = chain.back();
      if (head.dist_to_t == length_) {
        if (head.b.is_subset_of(s_) && s_.is_subset_of(head.m)) {
          ++stats_.chains_accepted;
          result.chains.push_back(std::move(chain));
        }
        continue;
      }
      ++stats_.triples_expanded;
      extend(chain, queue);
    }
    return result;
  }

 private:
  void extend(const BasisChain& chain, std::deque<BasisChain>& queue) {
    const auto& head = chain.back();
    const std::size_t level = length_ - head.dist_to_t - 1;
    const auto parents = in_neighbors(g_, head.b);
    VertexSet safe = g_.empty_set();
    VertexSet pool = g_.empty_set();
    if (config_.fidelity == Fidelity::literal) {
      safe = parents & levels_[level];
      for (auto v : VertexSet(safe)) {
        const auto out = successors_of(g_, v);
        const auto escaped = out - head.m;
        if (collides(g_, config_.stp_safe_sets ? head.b : head.b & out, escaped)) safe.erase(v);
      }
      pool = safe;
    } else {
      // Every vertex of the level whose escaping out-neighbours can still be
      // told apart from B, so that any set between B' and M' steps into the
      // head's sandwich once the next criterion is applied.
      for (auto v : levels_[level])
        if (!collides(g_, head.b, successors_of(g_, v) - head.m)) safe.insert(v);
      pool = safe & parents;
    }
    // At the S level the head is dropped before synthesis, so one admissible
    // basis is enough.
    const bool at_source = level == 0;
    if (at_source && !s_.is_subset_of(safe)) return;

    std::vector<CoverCandidate> candidates;
    for (auto v : pool) {
      auto image = successors_of(g_, v) & head.b;
      if (!image.empty()) candidates.push_back({v, std::move(image)});
    }
    for (auto& basis : enumerate_minimal_covers(g_.vertex_count(), candidates, head.b)) {
      ++stats_.pseudo_bases;
      const auto image = out_neighbors(g_, basis);
      if (collides(g_, head.b, image - head.m)) continue;
      BasisChain extended = chain;
      extended.push_back(ChainElement{std::move(basis), safe, head.dist_to_t + 1});
      queue.push_back(std::move(extended));
      if (at_source) break;
    }
  }

  const DirectedGraph& g_;
  const VertexSet& s_;
  const std::vector<VertexSet>& levels_;
  std::size_t length_;
  const MiningConfig& config_;
  SearchBudget& budget_;
  SearchStats& stats_;
};

/// Literal fidelity excludes the whole level outside M. Repaired fidelity
/// excludes only what the program built so far can actually step onto.
std::optional<TosetProgram> synthesize(const DirectedGraph& g, const VertexSet& s, const BasisChain& chain,
                                       const std::vector<VertexSet>& levels, Fidelity fidelity) {
  const std::size_t length = chain.size() - 1;
  TosetProgram program;
  program.reserve(length);
  VertexSet occupied = s;
  for (std::size_t k = 1; k <= length; ++k) {
    const auto& element = chain[length - k];
    const auto step = out_neighbors(g, occupied);
    const auto& reachable = fidelity == Fidelity::literal ? levels[k] : step;
    auto result = compute_criterion(g.schema(), features_of(g, element.b), features_of(g, element.m),
                                    features_of(g, reachable - element.m));
    if (std::holds_alternative<Inseparable>(result)) return std::nullopt;
    program.push_back(std::get<Criterion>(std::move(result)));
    occupied = select_by_criterion(g, step, program.back());
  }
  return program;
}

}  // namespace

bool consistent(const DirectedGraph& g, const VertexSet& a, const VertexSet& b_side, const VertexSet& e_side) {
  const auto image = out_neighbors(g, a);
  if (b_side.intersects(e_side) || !b_side.is_subset_of(image) || !e_side.is_subset_of(image))
    throw std::invalid_argument("consistent: sides must be disjoint subsets of N_o(A)");
  return !collides(g, b_side, e_side);
}

ChainSearchResult search_basis_chains(const DirectedGraph& g, const VertexSet& s, const VertexSet& t, MiningMode mode,
                                      std::size_t length, const MiningConfig& config, SearchBudget& budget,
                                      SearchStats& stats) {
  const auto levels = forward_levels(g, s, length);
  std::vector<BasisChain> seeds;
  if (mode == MiningMode::exact) {
    if (t.is_subset_of(levels[length])) seeds.push_back({ChainElement{t, t, 0}});
  } else {
    for (auto v : t & levels[length]) {
      VertexSet b = g.empty_set();
      b.insert(v);
      seeds.push_back({ChainElement{std::move(b), t, 0}});
    }
  }
  if (length == 0) {
    ChainSearchResult result;
    for (auto& chain : seeds)
      if (chain.back().b.is_subset_of(s) && s.is_subset_of(chain.back().m)) result.chains.push_back(std::move(chain));
    return result;
  }
  ChainSearch search(g, s, levels, length, config, budget, stats);
  return search.run(std::move(seeds));
}

std::vector<StpReport> mine_stp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t, MiningMode mode,
                                const MiningConfig& config, const LevelCallback<TosetProgram>& on_level) {
  if (s.empty() || t.empty()) throw std::invalid_argument("mine_stp: S and T must be nonempty");

  SearchBudget budget(config);
  std::vector<StpReport> reports;
  for (std::size_t length = 0; length <= config.max_len; ++length) {
    StpReport report;
    report.mode = mode;
    report.length = length;
    std::map<std::string, TosetProgram> programs;

    if (length == 0) {
      if (mode == MiningMode::exact ? s == t : s.is_subset_of(t)) programs.emplace("", TosetProgram{});
    } else {
      const auto levels = forward_levels(g, s, length);
      auto found = search_basis_chains(g, s, t, mode, length, config, budget, report.stats);
      report.exhausted = found.exhausted;
      for (const auto& chain : found.chains) {
        auto program = synthesize(g, s, chain, levels, config.fidelity);
        if (!program) {
          ++report.stats.criterion_failures;
          continue;
        }
        const auto cls = classify_stp(g, s, t, *program);
        if (mode == MiningMode::exact ? !cls.is_exact() : !cls.is_feasible()) {
          ++report.stats.rejected_by_simulation;
          continue;
        }
        auto key = describe(g.schema(), *program);
        if (programs.emplace(std::move(key), std::move(*program)).second) {
          budget.add_programs(1);
        } else {
          ++report.stats.dedup_hits;
        }
      }
    }
    for (auto& [key, program] : programs) report.programs.push_back(std::move(program));
    if (on_level) on_level(report);
    reports.push_back(std::move(report));
    if (!reports.back().exhausted || budget.over()) break;
  }
  return reports;
}

}  // namespace walkmine
