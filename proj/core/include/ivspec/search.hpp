#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ivspec/bounds.hpp"
#include "ivspec/generators.hpp"
#include "ivspec/graph.hpp"
#include "ivspec/labeling.hpp"

namespace ivspec {

enum class SearchMode { exhaustive, anneal };

struct SearchConfig {
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t seed = 0;
  /// Move budget for anneal mode; must be >= 1 there.
  std::uint64_t max_moves = 100'000;
  /// Expand only one labeling of each {phi, reflect(phi)} pair.
  bool symmetry_reduction = true;
  /// Cut subtrees that cannot beat the incumbent. Never changes best_size.
  bool prune = true;
  /// On regular graphs, stop as soon as the incumbent reaches the upper bound.
  bool stop_at_bound = true;
  /// Concurrent prefix shards for exhaustive mode.
  unsigned parallel_width = 1;
  /// Exhaustive mode refuses graphs with more edges unless `force` is set.
  std::size_t max_exhaustive_edges = 12;
  bool force = false;
  /// Anneal acceptance: accept a move changing |V_int| by d < 0 with
  /// probability exp(d / T); T starts here and is multiplied by `cooling`
  /// after every move.
  double initial_temperature = 1.0;
  double cooling = 0.999;
};

struct SearchOutcome {
  std::size_t best_size = 0;
  EdgeLabeling witness;
  /// Complete labelings evaluated (exhaustive) or moves attempted (anneal).
  std::uint64_t explored = 0;
  bool exhaustive = false;
  /// corollary_bound(r, n) on r-regular graphs with r >= 2.
  std::optional<std::size_t> bound;
};

/// Called with the label array of every complete labeling the exhaustive
/// search evaluates, together with its interval-vertex count. Must be
/// thread-safe when parallel_width > 1.
using LeafObserver = std::function<void(std::span<const Label>, std::size_t)>;

/// Exact maximum of |V_int| over all labelings, by branch and bound.
///
/// Labels are handed out in ascending order; the branching choice at depth t
/// is which unlabeled edge receives label t. Under that order a vertex whose
/// labeled edges stop forming a run of consecutive labels before it is
/// complete can never become interval, so n minus the count of such vertices
/// bounds every completion of the current prefix.
///
/// Throws PreconditionError when min degree < 2 or the edge count exceeds
/// the configured limit (without `force`), or exceeds 64.
SearchOutcome exhaustive_max(const Graph& g, const SearchConfig& cfg,
                             const LeafObserver& observer = {});

/// Simulated annealing over label transpositions. Deterministic per
/// (seed, max_moves, schedule); reports the best labeling ever visited.
/// Throws PreconditionError when min degree < 2, m < 2 or max_moves == 0.
SearchOutcome anneal_max(const Graph& g, const SearchConfig& cfg);

/// Dispatches on cfg.mode.
SearchOutcome maximize(const Graph& g, const SearchConfig& cfg);

struct SweepRow {
  GeneratorSpec spec;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<SearchOutcome> outcome;
  /// Bound check on the witness; absent for non-regular members.
  std::optional<BoundReport> report;
  /// Path-forest check on the witness; present whenever the search ran.
  std::optional<bool> proposition_holds;
  /// Set when generation, search or checking failed for this member.
  std::optional<std::string> error;
};

/// Runs `maximize` on every member and cross-checks each witness. A failing
/// member yields a row with `error` set; the sweep continues. `on_row` is
/// invoked as each row completes.
std::vector<SweepRow> sweep(std::span<const GeneratorSpec> family, const SearchConfig& cfg,
                            const std::function<void(const SweepRow&)>& on_row = {});

struct FuzzSummary {
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;
  /// Trials whose labeling had at least one interval vertex.
  std::uint64_t nonempty = 0;
  std::uint64_t proposition_violations = 0;
  std::uint64_t theorem_violations = 0;
  /// Trials where a Surr count, disjointness, union or edge identity check failed.
  std::uint64_t surr_violations = 0;
  /// False when the graph is not r-regular with r >= 2 (proposition only).
  bool theorem_checked = false;
};

struct FuzzViolation {
  std::uint64_t trial = 0;
  EdgeLabeling labeling;
  PropositionVerdict verdict;
  std::optional<BoundReport> report;
};

/// Checks `trials` uniformly random labelings drawn from one Rng(seed)
/// stream. Throws PreconditionError when min degree < 2.
FuzzSummary fuzz(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                 const std::function<void(const FuzzViolation&)>& on_violation = {});

} // namespace ivspec
