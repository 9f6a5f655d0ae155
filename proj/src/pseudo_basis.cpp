#include "walkmine/pseudo_basis.hpp"

#include <algorithm>

#include "walkmine/color_program.hpp"

namespace walkmine {

namespace {

class CoverSearch {
 public:
  CoverSearch(std::size_t universe, const std::vector<CoverCandidate>& candidates, std::size_t limit)
      : universe_(universe), candidates_(candidates), limit_(limit), allowed_(candidates.size(), true) {}

  void run(const VertexSet& uncovered) { recurse(uncovered); }

  std::vector<VertexSet> take() { return std::move(found_); }

 private:
  void recurse(const VertexSet& uncovered) {
    if (found_.size() >= limit_) return;
    if (uncovered.empty()) {
      VertexSet cover(universe_);
      for (auto i : chosen_) cover.insert(candidates_[i].vertex);
      found_.push_back(std::move(cover));
      return;
    }
    const VertexId e = uncovered.first();
    std::vector<std::size_t> options;
    for (std::size_t i = 0; i < candidates_.size(); ++i)
      if (allowed_[i] && candidates_[i].image.contains(e)) options.push_back(i);

    for (auto i : options) {
      const auto& image = candidates_[i].image;
      bool keeps_private = true;
      std::vector<VertexSet> saved = crit_;
      for (auto& crit : crit_) {
        crit -= image;
        if (crit.empty()) keeps_private = false;
      }
      if (keeps_private) {
        chosen_.push_back(i);
        crit_.push_back(image & uncovered);
        recurse(uncovered - image);
        chosen_.pop_back();
      }
      crit_ = std::move(saved);
      // Later siblings may not reuse i: covers containing it were produced here.
      allowed_[i] = false;
      if (found_.size() >= limit_) break;
    }
    for (auto i : options) allowed_[i] = true;
  }

  std::size_t universe_;
  const std::vector<CoverCandidate>& candidates_;
  std::size_t limit_;
  std::vector<bool> allowed_;
  std::vector<std::size_t> chosen_;
  std::vector<VertexSet> crit_;
  std::vector<VertexSet> found_;
};

}  // namespace

std::vector<VertexSet> enumerate_minimal_covers(std::size_t universe, const std::vector<CoverCandidate>& candidates,
                                                const VertexSet& required, std::size_t limit) {
  if (limit == 0) return {};
  std::vector<CoverCandidate> sorted = candidates;
  std::sort(sorted.begin(), sorted.end(),
            [](const CoverCandidate& a, const CoverCandidate& b) { return a.vertex < b.vertex; });
  for (auto& c : sorted) c.image &= required;
  CoverSearch search(universe, sorted, limit);
  search.run(required);
  auto found = search.take();
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<VertexSet> enumerate_pseudo_bases(const DirectedGraph& g, const VertexSet& pool, const VertexSet& b,
                                              const VertexSet& m, ColorId c, std::size_t limit) {
  std::vector<CoverCandidate> candidates;
  for (auto v : pool) {
    VertexSet single = g.empty_set();
    single.insert(v);
    auto image = color_image(g, single, c);
    if (!image.is_subset_of(m) || !image.intersects(b)) continue;
    candidates.push_back({v, std::move(image)});
  }
  return enumerate_minimal_covers(g.vertex_count(), candidates, b, limit);
}

}  // namespace walkmine
