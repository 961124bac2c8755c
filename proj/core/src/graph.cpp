#include "ivspec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "ivspec/error.hpp"

namespace ivspec {

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.vertex_count_ = n;
  g.edges_.assign(edges.begin(), edges.end());

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u >= n || e.v >= n) {
      throw InvalidGraph("edge " + std::to_string(i) + " (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ") has an endpoint >= n = " +
                             std::to_string(n),
                         i);
    }
    if (e.u == e.v) {
      throw InvalidGraph("edge " + std::to_string(i) + " is a loop at vertex " +
                             std::to_string(e.u),
                         i);
    }
    const auto lo = static_cast<std::uint64_t>(std::min(e.u, e.v));
    const auto hi = static_cast<std::uint64_t>(std::max(e.u, e.v));
    if (!seen.insert((lo << 32) | hi).second) {
      throw InvalidGraph("edge " + std::to_string(i) + " (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ") is a parallel edge",
                         i);
    }
    ++degree[e.u];
    ++degree[e.v];
  }

  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.incidence_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeIndex i = 0; i < g.edges_.size(); ++i) {
    g.incidence_[fill[g.edges_[i].u]++] = i;
    g.incidence_[fill[g.edges_[i].v]++] = i;
  }
  // handshake
  if (g.incidence_.size() != 2 * g.edges_.size()) {
    throw InvalidGraph("degree sum does not equal twice the edge count");
  }
  return g;
}

void Graph::require_vertex(Vertex v) const {
  if (v >= vertex_count_) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range (n = " +
                            std::to_string(vertex_count_) + ")");
  }
}

std::size_t min_degree(const Graph& g) {
  if (g.empty()) throw PreconditionError("min_degree of the empty graph is undefined");
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::optional<std::size_t> regularity(const Graph& g) {
  if (g.empty()) throw PreconditionError("regularity of the empty graph is undefined");
  const std::size_t r = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != r) return std::nullopt;
  }
  return r;
}

ComponentPartition components(const Graph& g) {
  ComponentPartition out;
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> block;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      block.push_back(x);
      for (EdgeIndex e : g.incident(x)) {
        const Vertex y = g.edge(e).other(x);
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    out.blocks.emplace_back(std::move(block));
  }
  return out;
}

Graph induced(const Graph& g, const VertexSet& s) {
  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> local(g.vertex_count(), kAbsent);
  for (std::size_t i = 0; i < s.size(); ++i) {
    g.require_vertex(s[i]);
    local[s[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != kAbsent && local[e.v] != kAbsent) kept.push_back({local[e.u], local[e.v]});
  }
  Graph sub = Graph::build(s.size(), kept);
  sub.parent_ids_.reserve(s.size());
  for (Vertex v : s) sub.parent_ids_.push_back(g.parent_id(v));
  return sub;
}

namespace {

// Multi-source BFS; returns the hop distance from the nearest source to `target`.
Distance bfs(const Graph& g, std::span<const Vertex> sources, Vertex target) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.vertex_count(), kUnset);
  std::vector<Vertex> frontier;
  for (Vertex s : sources) {
    if (dist[s] == kUnset) {
      dist[s] = 0;
      frontier.push_back(s);
    }
  }
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Vertex x = frontier[head];
    if (x == target) return dist[x];
    for (EdgeIndex e : g.incident(x)) {
      const Vertex y = g.edge(e).other(x);
      if (dist[y] == kUnset) {
        dist[y] = dist[x] + 1;
        frontier.push_back(y);
      }
    }
  }
  return std::nullopt;
}

} // namespace

Distance distance(const Graph& g, Vertex x, Vertex y) {
  g.require_vertex(x);
  g.require_vertex(y);
  const Vertex src[] = {x};
  return bfs(g, src, y);
}

Distance distance_to_set(const Graph& g, Vertex x, const VertexSet& s) {
  g.require_vertex(x);
  if (s.empty()) throw PreconditionError("distance to an empty vertex set is undefined");
  for (Vertex v : s) g.require_vertex(v);
  return bfs(g, s.ids(), x);
}

bool is_path_forest(const Graph& g) {
  if (max_degree(g) > 2) return false;
  // With max degree <= 2 a component is a path iff it has one edge fewer
  // than vertices; otherwise it is a cycle.
  for (const VertexSet& block : components(g).blocks) {
    std::size_t degree_sum = 0;
    for (Vertex v : block) degree_sum += g.degree(v);
    if (degree_sum / 2 != block.size() - 1) return false;
  }
  return true;
}

} // namespace ivspec
