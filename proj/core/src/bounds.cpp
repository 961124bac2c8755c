#include "ivspec/bounds.hpp"

#include <string>

#include "ivspec/error.hpp"

namespace ivspec {

SurrSubgraph surr(const Graph& g, const VertexSet& core) {
  if (core.empty()) throw PreconditionError("surr requires a nonempty core");
  std::vector<bool> in_core(g.vertex_count(), false);
  for (Vertex v : core) {
    g.require_vertex(v);
    in_core[v] = true;
  }

  SurrSubgraph out;
  out.core = core;
  std::vector<Vertex> reach(core.begin(), core.end());
  std::vector<bool> edge_taken(g.edge_count(), false);
  for (Vertex v : core) {
    for (EdgeIndex e : g.incident(v)) {
      // Both endpoints in the core: an edge of H. Otherwise the far endpoint
      // is at distance exactly 1 and the edge joins it to the core.
      edge_taken[e] = true;
      const Vertex w = g.edge(e).other(v);
      if (!in_core[w]) reach.push_back(w);
    }
  }
  out.vertices = VertexSet(std::move(reach));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (edge_taken[e]) out.edge_indices.push_back(e);
  }
  return out;
}

std::size_t theorem_bound(std::size_t r, std::size_t n, std::size_t k) {
  if (r < 2) throw PreconditionError("the bound requires r >= 2, got r = " + std::to_string(r));
  if (n < 1) throw PreconditionError("the bound requires n >= 1");
  if (2 * k > r * n) {
    throw PreconditionError("component count k = " + std::to_string(k) +
                            " exceeds r*n/2; numerator would be negative");
  }
  return (r * n - 2 * k) / (2 * (r - 1));
}

std::size_t corollary_bound(std::size_t r, std::size_t n) { return theorem_bound(r, n, 1); }

namespace {

struct InducedInterval {
  IntervalVertexSet v_int;
  Graph sub;
  ComponentPartition parts;
};

InducedInterval induce_interval_part(const Graph& g, const EdgeLabeling& phi) {
  InducedInterval out;
  out.v_int = interval_vertices(g, phi);
  out.sub = induced(g, out.v_int.vertices);
  out.parts = components(out.sub);
  return out;
}

VertexSet to_host(const Graph& sub, const VertexSet& block) {
  std::vector<Vertex> ids;
  ids.reserve(block.size());
  for (Vertex v : block) ids.push_back(sub.parent_id(v));
  return VertexSet(std::move(ids));
}

bool block_is_path(const Graph& sub, const VertexSet& block) {
  std::size_t degree_sum = 0;
  for (Vertex v : block) {
    if (sub.degree(v) > 2) return false;
    degree_sum += sub.degree(v);
  }
  return degree_sum / 2 + 1 == block.size();
}

std::optional<VertexSet> first_non_path(const InducedInterval& part) {
  for (const VertexSet& block : part.parts.blocks) {
    if (!block_is_path(part.sub, block)) return to_host(part.sub, block);
  }
  return std::nullopt;
}

} // namespace

PropositionVerdict check_proposition(const Graph& g, const EdgeLabeling& phi) {
  if (g.empty() || min_degree(g) < 2) {
    throw PreconditionError("the path-forest property requires minimum degree >= 2");
  }
  InducedInterval part = induce_interval_part(g, phi);
  PropositionVerdict verdict;
  verdict.offending_component = first_non_path(part);
  verdict.holds = !verdict.offending_component.has_value();
  verdict.v_int = std::move(part.v_int);
  return verdict;
}

BoundReport check_theorem(const Graph& g, const EdgeLabeling& phi) {
  if (g.empty()) throw PreconditionError("the bound requires a nonempty regular graph");
  const auto r = regularity(g);
  if (!r) throw PreconditionError("graph is not regular");
  if (*r < 2) throw PreconditionError("graph is " + std::to_string(*r) + "-regular; need r >= 2");

  InducedInterval part = induce_interval_part(g, phi);

  BoundReport report;
  report.r = *r;
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.k = part.parts.count();
  report.bound = theorem_bound(report.r, report.n, report.k);
  report.theorem_holds = part.v_int.size() <= report.bound;
  report.proposition_holds = !first_non_path(part).has_value();
  report.edge_identity_ok = 2 * report.m == report.r * report.n;

  std::vector<unsigned> cover(g.edge_count(), 0);
  std::size_t surr_sum = 0;
  bool counts_ok = true;
  for (const VertexSet& block : part.parts.blocks) {
    VertexSet core = to_host(part.sub, block);
    const SurrSubgraph s = surr(g, core);
    SurrCount c;
    c.path_vertices = core.size();
    c.surr_edges = s.edge_indices.size();
    c.expected = (report.r - 1) * core.size() + 1;
    counts_ok = counts_ok && c.ok();
    surr_sum += c.surr_edges;
    for (EdgeIndex e : s.edge_indices) ++cover[e];
    report.surr_edge_counts.push_back(c);
    report.components.push_back(std::move(core));
  }
  report.disjointness_ok = true;
  for (unsigned c : cover) {
    if (c > 1) report.disjointness_ok = false;
  }
  report.union_within_edges = surr_sum <= report.m;
  if (report.proposition_holds) report.surr_counts_ok = counts_ok;
  report.v_int = std::move(part.v_int);
  return report;
}

} // namespace ivspec
