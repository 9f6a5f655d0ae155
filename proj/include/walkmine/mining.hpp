#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace walkmine {

enum class MiningMode { exact, feasible };

/// `repaired` runs the safe-set search whose output is complete and verified
/// by simulation; `literal` follows the original pseudocode step for step
/// (including triple caching across lengths and unverified acceptance) and
/// exists for comparison runs.
enum class Fidelity { repaired, literal };

struct MiningConfig {
  std::size_t max_len = 4;
  std::optional<std::size_t> max_programs;
  std::optional<std::size_t> max_triples;
  std::optional<std::chrono::milliseconds> time_budget;
  Fidelity fidelity = Fidelity::repaired;
  /// Toset miner with literal fidelity: also drop pool vertices with an
  /// out-neighbour outside M whose features collide with any required vertex
  /// (the repaired miner always applies this rule).
  bool stp_safe_sets = false;
};

struct SearchStats {
  std::size_t triples_expanded = 0;
  std::size_t pseudo_bases = 0;
  std::size_t dedup_hits = 0;
  std::size_t rejected_by_simulation = 0;
  std::size_t chains_accepted = 0;
  std::size_t criterion_failures = 0;
};

template <class Program>
struct MiningReport {
  MiningMode mode = MiningMode::exact;
  std::size_t length = 0;
  /// False when a resource cap cut the search short; the program list is then
  /// possibly incomplete.
  bool exhausted = true;
  /// Deduplicated, canonically sorted.
  std::vector<Program> programs;
  SearchStats stats;
};

template <class Program>
using LevelCallback = std::function<void(const MiningReport<Program>&)>;

std::string_view to_string(MiningMode m);
std::string_view to_string(Fidelity f);

/// Tracks the resource caps of one mining session. Once a cap is hit it
/// stays hit.
class SearchBudget {
 public:
  explicit SearchBudget(const MiningConfig& config)
      : config_(config), start_(std::chrono::steady_clock::now()) {}

  /// Counts one expanded triple or chain; false once a cap is hit.
  bool charge_triple() {
    ++triples_;
    return !over();
  }
  void add_programs(std::size_t n) { programs_ += n; }

  bool over() {
    if (hit_) return true;
    if (config_.max_triples && triples_ > *config_.max_triples) hit_ = true;
    if (config_.max_programs && programs_ >= *config_.max_programs) hit_ = true;
    if (config_.time_budget && std::chrono::steady_clock::now() - start_ > *config_.time_budget) hit_ = true;
    return hit_;
  }

 private:
  const MiningConfig& config_;
  std::chrono::steady_clock::time_point start_;
  std::size_t triples_ = 0;
  std::size_t programs_ = 0;
  bool hit_ = false;
};

}  // namespace walkmine
