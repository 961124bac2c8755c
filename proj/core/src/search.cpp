#include "ivspec/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <string>
#include <thread>

#include "ivspec/error.hpp"
#include "ivspec/rng.hpp"

namespace ivspec {

namespace {

void require_searchable(const Graph& g) {
  if (g.empty() || min_degree(g) < 2) {
    throw PreconditionError("search requires a graph with minimum degree >= 2");
  }
}

std::optional<std::size_t> search_bound(const Graph& g) {
  const auto r = regularity(g);
  if (!r || *r < 2) return std::nullopt;
  return corollary_bound(*r, g.vertex_count());
}

std::string describe(std::span<const Label> labels) {
  std::string out = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(labels[i]);
  }
  return out + "]";
}

// Re-evaluates a witness from scratch through the labeling and bound layers.
void verify_witness(const Graph& g, const SearchOutcome& outcome) {
  const std::size_t actual = interval_vertices(g, outcome.witness).size();
  if (actual != outcome.best_size) {
    throw Error("internal: search reported " + std::to_string(outcome.best_size) +
                " interval vertices but the witness has " + std::to_string(actual));
  }
  const auto labels = outcome.witness.labels();
  const std::vector<std::uint32_t> copy(labels.begin(), labels.end());
  if (!check_proposition(g, outcome.witness).holds) {
    throw CounterexampleFound("COUNTEREXAMPLE: interval vertices of witness " +
                                  describe(labels) + " do not induce a path forest",
                              copy);
  }
  if (outcome.bound) {
    const BoundReport report = check_theorem(g, outcome.witness);
    if (!report.all_ok()) {
      throw CounterexampleFound("COUNTEREXAMPLE: witness " + describe(labels) +
                                    " fails the bound checks (|V_int| = " +
                                    std::to_string(report.v_int.size()) +
                                    ", bound = " + std::to_string(report.bound) + ")",
                                copy);
    }
  }
}

// Incumbent shared by all shards. `best` only grows; readers may see a stale
// value, which only weakens pruning.
struct Incumbent {
  std::atomic<std::int64_t> best{-1};
  std::atomic<bool> stop{false};
  std::mutex mutex;
  std::vector<Label> witness;
  std::optional<std::size_t> stop_at;

  void offer(std::size_t count, std::span<const Label> labels) {
    if (static_cast<std::int64_t>(count) <= best.load(std::memory_order_relaxed)) return;
    std::lock_guard lock(mutex);
    if (static_cast<std::int64_t>(count) <= best.load(std::memory_order_relaxed)) return;
    witness.assign(labels.begin(), labels.end());
    best.store(static_cast<std::int64_t>(count), std::memory_order_relaxed);
    if (stop_at && count >= *stop_at) stop.store(true, std::memory_order_relaxed);
  }
};

// Depth-first assignment of labels 1..m in ascending order.
class LabelAssigner {
public:
  LabelAssigner(const Graph& g, const SearchConfig& cfg, Incumbent& incumbent,
                const LeafObserver& observer)
      : g_(g),
        cfg_(cfg),
        incumbent_(incumbent),
        observer_(observer),
        n_(g.vertex_count()),
        m_(static_cast<Label>(g.edge_count())),
        remaining_(g.vertex_count(), 0),
        last_(g.vertex_count(), 0),
        doomed_(g.vertex_count(), false),
        chosen_(g.edge_count() + 1, 0),
        label_of_(g.edge_count(), 0) {
    for (Vertex v = 0; v < n_; ++v) remaining_[v] = static_cast<std::uint32_t>(g.degree(v));
    unassigned_ = m_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1;
  }

  /// Explores every labeling whose labels 1 and 2 go to `first` and `second`.
  void run_shard(EdgeIndex first, EdgeIndex second) {
    if (!admissible(1, first)) return;
    Undo u1 = apply(1, first);
    if (admissible(2, second)) {
      Undo u2 = apply(2, second);
      if (promising()) descend(3);
      undo(2, second, u2);
    }
    undo(1, first, u1);
  }

  std::uint64_t explored() const noexcept { return explored_; }

private:
  struct Undo {
    Vertex doomed[2];
    std::uint8_t doomed_count = 0;
    Label prev_last[2];
  };

  bool admissible(Label t, EdgeIndex e) const {
    if (!(unassigned_ >> e & 1)) return false;
    if (!cfg_.symmetry_reduction) return true;
    // Canonical member of {phi, reflect(phi)}: the edge labeled 1 has a
    // smaller index than the edge labeled m.
    if (t == 1) return e + 1u < m_;
    if (t == m_ || e < chosen_[1]) return true;
    const std::uint64_t above = unassigned_ >> (chosen_[1] + 1);
    return std::popcount(above) > 1;
  }

  Undo apply(Label t, EdgeIndex e) {
    Undo u;
    const Edge& edge = g_.edge(e);
    if (t > 1) {
      // A vertex that took label t-1 but not t, and still has unlabeled
      // edges, now has a gap in its spectrum.
      const Edge& prev = g_.edge(chosen_[t - 1]);
      for (Vertex y : {prev.u, prev.v}) {
        if (remaining_[y] > 0 && !edge.touches(y) && !doomed_[y]) {
          doomed_[y] = true;
          ++doomed_total_;
          u.doomed[u.doomed_count++] = y;
        }
      }
    }
    u.prev_last[0] = last_[edge.u];
    u.prev_last[1] = last_[edge.v];
    last_[edge.u] = t;
    last_[edge.v] = t;
    --remaining_[edge.u];
    --remaining_[edge.v];
    unassigned_ &= ~(std::uint64_t{1} << e);
    chosen_[t] = e;
    label_of_[e] = t;
    return u;
  }

  void undo(Label, EdgeIndex e, const Undo& u) {
    const Edge& edge = g_.edge(e);
    unassigned_ |= std::uint64_t{1} << e;
    ++remaining_[edge.u];
    ++remaining_[edge.v];
    last_[edge.v] = u.prev_last[1];
    last_[edge.u] = u.prev_last[0];
    for (std::uint8_t i = 0; i < u.doomed_count; ++i) doomed_[u.doomed[i]] = false;
    doomed_total_ -= u.doomed_count;
    label_of_[e] = 0;
  }

  bool promising() const {
    if (!cfg_.prune) return true;
    return static_cast<std::int64_t>(n_ - doomed_total_) >
           incumbent_.best.load(std::memory_order_relaxed);
  }

  void descend(Label t) {
    if (t > m_) {
      leaf();
      return;
    }
    std::uint64_t open = unassigned_;
    while (open != 0) {
      const auto e = static_cast<EdgeIndex>(std::countr_zero(open));
      open &= open - 1;
      if (!admissible(t, e)) continue;
      Undo u = apply(t, e);
      if (promising()) descend(t + 1);
      undo(t, e, u);
      if (incumbent_.stop.load(std::memory_order_relaxed)) return;
    }
  }

  void leaf() {
    ++explored_;
    const std::size_t count = n_ - doomed_total_;
    if (observer_) observer_(label_of_, count);
    incumbent_.offer(count, label_of_);
  }

  const Graph& g_;
  const SearchConfig& cfg_;
  Incumbent& incumbent_;
  const LeafObserver& observer_;
  std::size_t n_;
  Label m_;
  std::vector<std::uint32_t> remaining_;
  std::vector<Label> last_;
  std::vector<bool> doomed_;
  std::size_t doomed_total_ = 0;
  std::uint64_t unassigned_ = 0;
  std::vector<EdgeIndex> chosen_;
  std::vector<Label> label_of_;
  std::uint64_t explored_ = 0;
};

} // namespace

SearchOutcome exhaustive_max(const Graph& g, const SearchConfig& cfg,
                             const LeafObserver& observer) {
  require_searchable(g);
  const std::size_t m = g.edge_count();
  if (m > 64) throw PreconditionError("exhaustive search supports at most 64 edges");
  if (m > cfg.max_exhaustive_edges && !cfg.force) {
    throw PreconditionError("exhaustive search over " + std::to_string(m) +
                            "! labelings refused (limit " +
                            std::to_string(cfg.max_exhaustive_edges) + " edges; use force)");
  }

  SearchOutcome outcome;
  outcome.exhaustive = true;
  outcome.bound = search_bound(g);

  Incumbent incumbent;
  if (cfg.stop_at_bound) incumbent.stop_at = outcome.bound;

  // min degree >= 2 implies m >= 3, so labels 1 and 2 always exist.
  std::vector<std::pair<EdgeIndex, EdgeIndex>> shards;
  for (EdgeIndex a = 0; a < m; ++a)
    for (EdgeIndex b = 0; b < m; ++b)
      if (a != b) shards.emplace_back(a, b);

  std::atomic<std::size_t> next_shard{0};
  std::atomic<std::uint64_t> explored{0};
  auto worker = [&] {
    LabelAssigner assigner(g, cfg, incumbent, observer);
    for (;;) {
      if (incumbent.stop.load(std::memory_order_relaxed)) break;
      const std::size_t i = next_shard.fetch_add(1);
      if (i >= shards.size()) break;
      assigner.run_shard(shards[i].first, shards[i].second);
    }
    explored += assigner.explored();
  };

  const unsigned width = std::max(1u, cfg.parallel_width);
  if (width == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < width; ++i) pool.emplace_back(worker);
  }

  outcome.best_size = static_cast<std::size_t>(incumbent.best.load());
  outcome.witness = make_labeling(g, incumbent.witness);
  outcome.explored = explored.load();
  verify_witness(g, outcome);
  return outcome;
}

SearchOutcome anneal_max(const Graph& g, const SearchConfig& cfg) {
  require_searchable(g);
  const std::size_t m = g.edge_count();
  if (m < 2) throw PreconditionError("anneal needs at least two edges");
  if (cfg.max_moves == 0) throw PreconditionError("anneal needs a move budget >= 1");

  SearchOutcome outcome;
  outcome.exhaustive = false;
  outcome.bound = search_bound(g);

  Rng rng(cfg.seed);
  std::vector<Label> labels(m);
  for (std::size_t e = 0; e < m; ++e) labels[e] = static_cast<Label>(e + 1);
  rng.shuffle(std::span<Label>(labels));

  auto interval_at = [&](Vertex x) {
    Label lo = static_cast<Label>(m) + 1;
    Label hi = 0;
    for (EdgeIndex e : g.incident(x)) {
      lo = std::min(lo, labels[e]);
      hi = std::max(hi, labels[e]);
    }
    return hi - lo + 1 == g.degree(x);
  };

  std::vector<bool> interval(g.vertex_count());
  std::size_t current = 0;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    interval[x] = interval_at(x);
    current += interval[x];
  }
  std::size_t best = current;
  std::vector<Label> best_labels = labels;

  double temperature = cfg.initial_temperature;
  std::uint64_t moves = 0;
  while (moves < cfg.max_moves) {
    if (cfg.stop_at_bound && outcome.bound && best >= *outcome.bound) break;
    ++moves;
    const auto e1 = static_cast<EdgeIndex>(rng.uniform_below(m));
    auto e2 = static_cast<EdgeIndex>(rng.uniform_below(m - 1));
    if (e2 >= e1) ++e2;
    std::swap(labels[e1], labels[e2]);

    Vertex touched[4] = {g.edge(e1).u, g.edge(e1).v, g.edge(e2).u, g.edge(e2).v};
    std::sort(std::begin(touched), std::end(touched));
    const auto touched_end = std::unique(std::begin(touched), std::end(touched));
    bool fresh[4] = {};
    long delta = 0;
    for (auto* it = std::begin(touched); it != touched_end; ++it) {
      const auto i = static_cast<std::size_t>(it - std::begin(touched));
      fresh[i] = interval_at(*it);
      delta += static_cast<long>(fresh[i]) - static_cast<long>(interval[*it]);
    }

    const bool accept =
        delta >= 0 || rng.uniform_unit() < std::exp(static_cast<double>(delta) / temperature);
    if (accept) {
      for (auto* it = std::begin(touched); it != touched_end; ++it) {
        interval[*it] = fresh[it - std::begin(touched)];
      }
      current = static_cast<std::size_t>(static_cast<long>(current) + delta);
      if (current > best) {
        best = current;
        best_labels = labels;
      }
    } else {
      std::swap(labels[e1], labels[e2]);
    }
    temperature *= cfg.cooling;
  }

  outcome.best_size = best;
  outcome.witness = make_labeling(g, std::move(best_labels));
  outcome.explored = moves;
  verify_witness(g, outcome);
  return outcome;
}

SearchOutcome maximize(const Graph& g, const SearchConfig& cfg) {
  return cfg.mode == SearchMode::exhaustive ? exhaustive_max(g, cfg) : anneal_max(g, cfg);
}

std::vector<SweepRow> sweep(std::span<const GeneratorSpec> family, const SearchConfig& cfg,
                            const std::function<void(const SweepRow&)>& on_row) {
  std::vector<SweepRow> rows;
  rows.reserve(family.size());
  for (const GeneratorSpec& spec : family) {
    SweepRow row;
    row.spec = spec;
    try {
      const Graph g = generate(spec);
      row.n = g.vertex_count();
      row.m = g.edge_count();
      row.outcome = maximize(g, cfg);
      row.proposition_holds = check_proposition(g, row.outcome->witness).holds;
      if (row.outcome->bound) row.report = check_theorem(g, row.outcome->witness);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    if (on_row) on_row(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

FuzzSummary fuzz(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                 const std::function<void(const FuzzViolation&)>& on_violation) {
  require_searchable(g);
  FuzzSummary summary;
  summary.theorem_checked = search_bound(g).has_value();
  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    FuzzViolation v;
    v.trial = t;
    v.labeling = random_labeling(g, rng);
    v.verdict = check_proposition(g, v.labeling);
    bool ok = v.verdict.holds;
    if (!v.verdict.holds) ++summary.proposition_violations;
    if (!v.verdict.v_int.vertices.empty()) ++summary.nonempty;
    if (summary.theorem_checked) {
      v.report = check_theorem(g, v.labeling);
      if (!v.report->theorem_holds) {
        ++summary.theorem_violations;
        ok = false;
      }
      const BoundReport& r = *v.report;
      const bool surr_ok = r.surr_counts_ok.value_or(false) && r.disjointness_ok &&
                           r.union_within_edges && r.edge_identity_ok;
      if (!surr_ok) {
        ++summary.surr_violations;
        ok = false;
      }
    }
    ++summary.trials;
    if (ok) {
      ++summary.passed;
    } else if (on_violation) {
      on_violation(v);
    }
  }
  return summary;
}

} // namespace ivspec
