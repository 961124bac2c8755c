#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ivspec/graph.hpp"

namespace ivspec {

/// Vertices 0..n-1 in cycle order; edge i joins i and (i+1) mod n. n >= 3.
struct CycleSpec { std::size_t n; };
/// Edges (i, j), i < j, in lexicographic order. n >= 1.
struct CompleteSpec { std::size_t n; };
/// Parts 0..a-1 and a..a+b-1; edges (i, a+j) with i major. a, b >= 1.
struct CompleteBipartiteSpec { std::size_t a; std::size_t b; };
/// Outer cycle 0..n-1, inner cycle n..2n-1, then rungs (i, n+i). n >= 3.
struct PrismSpec { std::size_t n; };
/// For each s in `connections` (in the given order), edges (i, i+s mod n)
/// for i = 0..n-1. Each s must satisfy 1 <= s < ceil(n/2); no duplicates.
struct CirculantSpec { std::size_t n; std::vector<std::size_t> connections; };
/// Outer 5-cycle 0..4, spokes (i, i+5), inner pentagram (5+i, 5+(i+2)%5).
struct PetersenSpec {};
/// Pairing model with full restart on loops or parallel edges.
/// Requires n*r even and r < n.
struct RandomRegularSpec { std::size_t n; std::size_t r; std::uint64_t seed; };

using GeneratorSpec = std::variant<CycleSpec, CompleteSpec, CompleteBipartiteSpec, PrismSpec,
                                   CirculantSpec, PetersenSpec, RandomRegularSpec>;

/// Throws PreconditionError on invalid parameters.
Graph generate(const GeneratorSpec& spec);

/// The degree every vertex of generate(spec) has, or nullopt for
/// non-regular members (complete_bipartite with a != b).
std::optional<std::size_t> expected_regularity(const GeneratorSpec& spec);

/// Text form: `cycle:5`, `complete:4`, `complete_bipartite:3:3`, `prism:4`,
/// `circulant:8:1,3`, `petersen`, `random_regular:10:3:7` (n:r:seed).
GeneratorSpec parse_generator_spec(std::string_view text);
std::string to_string(const GeneratorSpec& spec);

/// Like parse_generator_spec, but any numeric field may be an inclusive
/// range `lo..hi`; the result is the cartesian product, last field fastest.
/// Example: `random_regular:10:3:0..4` expands to five specs.
std::vector<GeneratorSpec> expand_family(std::string_view text);

} // namespace ivspec
