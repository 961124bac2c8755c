#include "ivspec/labeling.hpp"

#include <algorithm>
#include <string>

#include "ivspec/error.hpp"
#include "ivspec/rng.hpp"

namespace ivspec {

EdgeLabeling::EdgeLabeling(std::vector<Label> labels) : labels_(std::move(labels)) {
  const std::size_t m = labels_.size();
  std::vector<bool> used(m + 1, false);
  for (std::size_t e = 0; e < m; ++e) {
    const Label l = labels_[e];
    if (l < 1 || l > m) {
      throw InvalidLabeling("label " + std::to_string(l) + " on edge " + std::to_string(e) +
                            " is outside 1.." + std::to_string(m));
    }
    if (used[l]) {
      throw InvalidLabeling("label " + std::to_string(l) + " is repeated (edge " +
                            std::to_string(e) + "); a labeling must be a bijection");
    }
    used[l] = true;
  }
}

EdgeLabeling make_labeling(const Graph& g, std::vector<Label> labels) {
  if (labels.size() != g.edge_count()) {
    throw InvalidLabeling("expected " + std::to_string(g.edge_count()) + " labels, got " +
                          std::to_string(labels.size()));
  }
  return EdgeLabeling(std::move(labels));
}

EdgeLabeling sequential_labeling(const Graph& g) {
  std::vector<Label> labels(g.edge_count());
  for (std::size_t e = 0; e < labels.size(); ++e) labels[e] = static_cast<Label>(e + 1);
  return EdgeLabeling(std::move(labels));
}

EdgeLabeling random_labeling(const Graph& g, Rng& rng) {
  std::vector<Label> labels(g.edge_count());
  for (std::size_t e = 0; e < labels.size(); ++e) labels[e] = static_cast<Label>(e + 1);
  rng.shuffle(std::span<Label>(labels));
  return EdgeLabeling(std::move(labels));
}

namespace {

void require_matching(const Graph& g, const EdgeLabeling& phi) {
  if (phi.size() != g.edge_count()) {
    throw PreconditionError("labeling has " + std::to_string(phi.size()) +
                            " labels but the graph has " + std::to_string(g.edge_count()) +
                            " edges");
  }
}

} // namespace

VertexSpectrum spectrum(const Graph& g, const EdgeLabeling& phi, Vertex x) {
  g.require_vertex(x);
  require_matching(g, phi);
  VertexSpectrum s;
  s.reserve(g.degree(x));
  for (EdgeIndex e : g.incident(x)) s.push_back(phi[e]);
  std::sort(s.begin(), s.end());
  return s;
}

bool is_interval(std::span<const Label> s) {
  if (s.empty()) throw PreconditionError("an empty spectrum is not an interval candidate");
  return s.back() - s.front() + 1 == s.size();
}

IntervalVertexSet interval_vertices(const Graph& g, const EdgeLabeling& phi) {
  require_matching(g, phi);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const auto inc = g.incident(x);
    if (inc.empty()) {
      throw PreconditionError("spectrum undefined: vertex " + std::to_string(x) +
                              " is isolated");
    }
    // Labels are distinct, so min/max suffice.
    Label lo = phi[inc[0]];
    Label hi = lo;
    for (EdgeIndex e : inc.subspan(1)) {
      lo = std::min(lo, phi[e]);
      hi = std::max(hi, phi[e]);
    }
    if (hi - lo + 1 == inc.size()) out.push_back(x);
  }
  return {VertexSet(std::move(out))};
}

EdgeLabeling reflect(const EdgeLabeling& phi) {
  const auto m = static_cast<Label>(phi.size());
  std::vector<Label> out(phi.size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = m + 1 - phi[static_cast<EdgeIndex>(e)];
  return EdgeLabeling(std::move(out));
}

} // namespace ivspec
