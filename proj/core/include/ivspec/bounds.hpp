#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ivspec/graph.hpp"
#include "ivspec/labeling.hpp"

namespace ivspec {

/// The closed neighbourhood of an induced core H = G[core]: every vertex
/// within distance 1 of the core, with the edges of H plus every edge that
/// joins an outside neighbour to the core.
struct SurrSubgraph {
  VertexSet core;
  VertexSet vertices;
  std::vector<EdgeIndex> edge_indices; // ascending
};

/// Throws PreconditionError on an empty core or an out-of-range member.
SurrSubgraph surr(const Graph& g, const VertexSet& core);

/// floor((r*n - 2k) / (2(r-1))), integer arithmetic only.
/// Throws PreconditionError for r < 2, n < 1 or 2k > r*n.
std::size_t theorem_bound(std::size_t r, std::size_t n, std::size_t k);

/// theorem_bound(r, n, 1).
std::size_t corollary_bound(std::size_t r, std::size_t n);

struct PropositionVerdict {
  bool holds = true;
  IntervalVertexSet v_int;
  /// First component of G[V_int] that is not a simple path, in host ids.
  std::optional<VertexSet> offending_component;
};

/// Whether G[V_int(g, phi)] is a path forest (vacuously true when V_int is
/// empty). Throws PreconditionError when min degree < 2.
PropositionVerdict check_proposition(const Graph& g, const EdgeLabeling& phi);

/// Surr edge count of one component P of G[V_int] against (r-1)|V(P)| + 1.
struct SurrCount {
  std::size_t path_vertices = 0;
  std::size_t surr_edges = 0;
  std::size_t expected = 0;
  bool ok() const noexcept { return surr_edges == expected; }
};

struct BoundReport {
  std::size_t r = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  IntervalVertexSet v_int;
  std::size_t k = 0;
  std::size_t bound = 0;
  bool proposition_holds = false;
  bool theorem_holds = false;
  /// One entry per component of G[V_int], ordered by smallest vertex.
  std::vector<SurrCount> surr_edge_counts;
  /// Components of G[V_int] in host ids, parallel to surr_edge_counts.
  std::vector<VertexSet> components;
  /// All Surr counts match; only evaluated when the proposition holds.
  std::optional<bool> surr_counts_ok;
  bool disjointness_ok = false;
  /// Sum of Surr edge counts <= |E(G)|.
  bool union_within_edges = false;
  /// |E(G)| * 2 == r * |V(G)|.
  bool edge_identity_ok = false;

  /// True when every flag holds; false would be a counterexample.
  bool all_ok() const noexcept {
    return proposition_holds && theorem_holds && surr_counts_ok.value_or(false) &&
           disjointness_ok && union_within_edges && edge_identity_ok;
  }
};

/// Evaluates the bound and every counting step behind it for one labeling.
/// Throws PreconditionError unless `g` is r-regular with r >= 2.
BoundReport check_theorem(const Graph& g, const EdgeLabeling& phi);

} // namespace ivspec
