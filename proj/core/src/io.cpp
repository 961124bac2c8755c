#include "ivspec/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "ivspec/error.hpp"

namespace ivspec {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(std::move(t));
  return out;
}

std::uint64_t parse_number(const std::string& token, std::size_t line) {
  std::uint64_t value = 0;
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

} // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "missing header 'n m'");
  ++line_no;
  const auto header = tokens_of(line);
  if (header.size() != 2) throw ParseError(line_no, "header must be 'n m'");
  const std::uint64_t n = parse_number(header[0], line_no);
  const std::uint64_t m = parse_number(header[1], line_no);
  if (n > 0xffffffffu) throw ParseError(line_no, "vertex count too large");

  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  while (edges.size() < m) {
    if (!std::getline(in, line)) {
      throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges.size()));
    }
    ++line_no;
    const auto t = tokens_of(line);
    if (t.size() != 2) throw ParseError(line_no, "edge line must be 'u v'");
    const std::uint64_t u = parse_number(t[0], line_no);
    const std::uint64_t v = parse_number(t[1], line_no);
    if (u >= n || v >= n) {
      throw ParseError(line_no, "endpoint out of range (n = " + std::to_string(n) + ")");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    lines.push_back(line_no);
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!blank(line)) throw ParseError(line_no, "unexpected content after the last edge");
  }

  try {
    return Graph::build(n, edges);
  } catch (const InvalidGraph& e) {
    const std::size_t at = e.edge_index() ? lines[*e.edge_index()] : 1;
    throw ParseError(at, e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

EdgeLabeling read_labeling(std::istream& in, const Graph& g) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<Label> labels;
  bool seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    if (seen) throw ParseError(line_no, "labeling must be a single line");
    seen = true;
    for (const std::string& t : tokens_of(line)) {
      const std::uint64_t value = parse_number(t, line_no);
      if (value > 0xffffffffu) throw ParseError(line_no, "label too large: " + t);
      labels.push_back(static_cast<Label>(value));
    }
    if (labels.size() != g.edge_count()) {
      throw ParseError(line_no, "expected " + std::to_string(g.edge_count()) +
                                    " labels, found " + std::to_string(labels.size()));
    }
    try {
      return make_labeling(g, std::move(labels));
    } catch (const InvalidLabeling& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (g.edge_count() == 0) return EdgeLabeling();
  throw ParseError(line_no + 1, "missing labeling line");
}

void write_labeling(std::ostream& out, const EdgeLabeling& phi) {
  for (std::size_t e = 0; e < phi.size(); ++e) {
    out << (e ? " " : "") << phi[static_cast<EdgeIndex>(e)];
  }
  out << '\n';
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  try {
    return read_edge_list(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path);
  }
}

EdgeLabeling load_labeling(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open labeling file '" + path + "'");
  try {
    return read_labeling(in, g);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path);
  }
}

Json labeling_json(const EdgeLabeling& phi, const IntervalVertexSet& v_int) {
  Json j;
  j["labels"] = std::vector<Label>(phi.labels().begin(), phi.labels().end());
  j["v_int"] = v_int.vertices.ids();
  j["v_int_size"] = v_int.size();
  return j;
}

Json to_json(const PropositionVerdict& verdict) {
  Json j;
  j["proposition_holds"] = verdict.holds;
  j["v_int"] = verdict.v_int.vertices.ids();
  j["v_int_size"] = verdict.v_int.size();
  j["offending_component"] =
      verdict.offending_component ? Json(verdict.offending_component->ids()) : Json(nullptr);
  return j;
}

Json to_json(const BoundReport& report) {
  Json j;
  j["r"] = report.r;
  j["n"] = report.n;
  j["m"] = report.m;
  j["v_int"] = report.v_int.vertices.ids();
  j["v_int_size"] = report.v_int.size();
  j["k"] = report.k;
  j["bound"] = report.bound;
  j["proposition_holds"] = report.proposition_holds;
  j["theorem_holds"] = report.theorem_holds;
  Json counts = Json::array();
  for (std::size_t i = 0; i < report.surr_edge_counts.size(); ++i) {
    const SurrCount& c = report.surr_edge_counts[i];
    Json row;
    row["component"] = report.components[i].ids();
    row["path_vertices"] = c.path_vertices;
    row["surr_edges"] = c.surr_edges;
    row["expected"] = c.expected;
    counts.push_back(std::move(row));
  }
  j["surr_edge_counts"] = std::move(counts);
  j["surr_counts_ok"] = report.surr_counts_ok ? Json(*report.surr_counts_ok) : Json(nullptr);
  j["disjointness_ok"] = report.disjointness_ok;
  j["union_within_edges"] = report.union_within_edges;
  j["edge_identity_ok"] = report.edge_identity_ok;
  j["all_ok"] = report.all_ok();
  return j;
}

Json to_json(const SearchOutcome& outcome) {
  Json j;
  j["best_size"] = outcome.best_size;
  const auto labels = outcome.witness.labels();
  j["witness_labels"] = std::vector<Label>(labels.begin(), labels.end());
  j["explored"] = outcome.explored;
  j["exhaustive"] = outcome.exhaustive;
  j["bound"] = outcome.bound ? Json(*outcome.bound) : Json(nullptr);
  return j;
}

Json to_json(const SweepRow& row) {
  Json j;
  j["family"] = to_string(row.spec);
  j["n"] = row.n;
  j["m"] = row.m;
  j["outcome"] = row.outcome ? to_json(*row.outcome) : Json(nullptr);
  j["proposition_holds"] = row.proposition_holds ? Json(*row.proposition_holds) : Json(nullptr);
  j["report"] = row.report ? to_json(*row.report) : Json(nullptr);
  j["error"] = row.error ? Json(*row.error) : Json(nullptr);
  return j;
}

Json to_json(const FuzzSummary& summary) {
  Json j;
  j["trials"] = summary.trials;
  j["passed"] = summary.passed;
  j["nonempty"] = summary.nonempty;
  j["proposition_violations"] = summary.proposition_violations;
  j["theorem_violations"] = summary.theorem_violations;
  j["surr_violations"] = summary.surr_violations;
  j["theorem_checked"] = summary.theorem_checked;
  return j;
}

} // namespace ivspec
