#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ivspec/graph.hpp"

namespace ivspec {

/// Labels are 1-based: a labeling of m edges uses exactly {1..m}.
using Label = std::uint32_t;

/// Bijection from edge indices to {1..m}; `label(e)` is the label of edge e.
class EdgeLabeling {
public:
  EdgeLabeling() = default;

  /// Throws InvalidLabeling unless `labels` is a permutation of {1..size}.
  explicit EdgeLabeling(std::vector<Label> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  Label label(EdgeIndex e) const noexcept { return labels_[e]; }
  Label operator[](EdgeIndex e) const noexcept { return labels_[e]; }
  std::span<const Label> labels() const noexcept { return labels_; }

  friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;

private:
  std::vector<Label> labels_;
};

/// Sorted labels on the edges incident with one vertex.
using VertexSpectrum = std::vector<Label>;

/// Vertices whose spectrum is an interval, in host-graph coordinates.
struct IntervalVertexSet {
  VertexSet vertices;
  std::size_t size() const noexcept { return vertices.size(); }
};

/// Validates `labels` against the edge count of `g`.
EdgeLabeling make_labeling(const Graph& g, std::vector<Label> labels);

class Rng;

/// Uniformly random labeling: 1..m in edge order, then rng.shuffle().
EdgeLabeling random_labeling(const Graph& g, Rng& rng);

/// Labels 1..m in edge-index order.
EdgeLabeling sequential_labeling(const Graph& g);

VertexSpectrum spectrum(const Graph& g, const EdgeLabeling& phi, Vertex x);

/// True iff the sorted, duplicate-free `s` is a run of consecutive integers.
/// Throws PreconditionError on an empty spectrum.
bool is_interval(std::span<const Label> s);

/// Throws PreconditionError if `g` has an isolated vertex (its spectrum would
/// be empty) or if `phi` does not match the edge count.
IntervalVertexSet interval_vertices(const Graph& g, const EdgeLabeling& phi);

/// phi'(e) = m + 1 - phi(e).
EdgeLabeling reflect(const EdgeLabeling& phi);

} // namespace ivspec
