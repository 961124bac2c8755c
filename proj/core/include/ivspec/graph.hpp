#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace ivspec {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  /// The endpoint that is not `x`. `x` must be an endpoint.
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
  bool touches(Vertex x) const noexcept { return x == u || x == v; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  /// Sorts and removes duplicates.
  explicit VertexSet(std::vector<Vertex> ids);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(Vertex v) const noexcept;

  Vertex operator[](std::size_t i) const noexcept { return ids_[i]; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  const std::vector<Vertex>& ids() const noexcept { return ids_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  std::vector<Vertex> ids_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges keep the index they were given at construction; every labeling in
/// this library is an array indexed by that edge index. Graphs produced by
/// `induced()` also remember the parent-graph id of each of their vertices.
class Graph {
public:
  /// The empty graph (n = 0).
  Graph() = default;

  /// Validates and builds. Throws InvalidGraph on a loop, a parallel edge or
  /// an endpoint >= n; the error carries the index of the offending pair.
  static Graph build(std::size_t n, std::span<const Edge> edges);
  static Graph build(std::size_t n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertex_count_ == 0; }

  const Edge& edge(EdgeIndex e) const noexcept { return edges_[e]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Incident edge indices of `v`, ascending.
  std::span<const EdgeIndex> incident(Vertex v) const noexcept {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  /// Vertex id in the graph this one was induced from (identity otherwise).
  Vertex parent_id(Vertex v) const noexcept {
    return parent_ids_.empty() ? v : parent_ids_[v];
  }

  /// Throws PreconditionError if `v` is not a vertex.
  void require_vertex(Vertex v) const;

private:
  friend Graph induced(const Graph& g, const VertexSet& s);

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<EdgeIndex> incidence_;
  std::vector<Vertex> parent_ids_;
};

/// Partition of the vertex set into maximal connected blocks.
struct ComponentPartition {
  std::vector<VertexSet> blocks;
  std::size_t count() const noexcept { return blocks.size(); }
};

/// Shortest-path length in hops; nullopt when unreachable.
using Distance = std::optional<std::size_t>;

/// Least vertex degree. Throws PreconditionError on the empty graph.
std::size_t min_degree(const Graph& g);
std::size_t max_degree(const Graph& g);

/// The common degree r if every vertex has degree r, else nullopt.
/// Throws PreconditionError on the empty graph.
std::optional<std::size_t> regularity(const Graph& g);

/// Connected components; blocks are ordered by their smallest vertex.
/// The empty graph has zero components.
ComponentPartition components(const Graph& g);

/// Subgraph induced by `s`, re-indexed 0..|s|-1 in ascending id order.
/// Edge order follows the parent's edge indices. Throws PreconditionError if
/// a member of `s` is not a vertex of `g`.
Graph induced(const Graph& g, const VertexSet& s);

Distance distance(const Graph& g, Vertex x, Vertex y);

/// Minimum distance from `x` to a member of `s`. Throws on empty `s`.
Distance distance_to_set(const Graph& g, Vertex x, const VertexSet& s);

/// True iff every component is a simple path (isolated vertices included).
bool is_path_forest(const Graph& g);

} // namespace ivspec
