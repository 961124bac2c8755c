#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "ivspec/bounds.hpp"
#include "ivspec/graph.hpp"
#include "ivspec/labeling.hpp"
#include "ivspec/search.hpp"

namespace ivspec {

/// Insertion-ordered JSON, so that serialized output is stable byte for byte.
using Json = nlohmann::ordered_json;

// Edge-list text format:
//   n m
//   u v        (m lines, 0-based endpoints, whitespace separated)
// Blank lines after the last edge are ignored. Violations of the simple-graph
// rules are reported as ParseError with the offending line number.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Labeling text format: one line of m integers; position = edge index.
EdgeLabeling read_labeling(std::istream& in, const Graph& g);
void write_labeling(std::ostream& out, const EdgeLabeling& phi);

Graph load_edge_list(const std::string& path);
EdgeLabeling load_labeling(const std::string& path, const Graph& g);

/// {"labels": [...], "v_int": [...], "v_int_size": k}
Json labeling_json(const EdgeLabeling& phi, const IntervalVertexSet& v_int);
Json to_json(const PropositionVerdict& verdict);
Json to_json(const BoundReport& report);
/// {"best_size", "witness_labels", "explored", "exhaustive", "bound"}
Json to_json(const SearchOutcome& outcome);
Json to_json(const SweepRow& row);
Json to_json(const FuzzSummary& summary);

} // namespace ivspec
