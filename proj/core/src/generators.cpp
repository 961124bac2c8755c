#include "ivspec/generators.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_set>

#include "ivspec/error.hpp"
#include "ivspec/rng.hpp"

namespace ivspec {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Edge make_edge(std::size_t u, std::size_t v) {
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph::build(n, edges);
}

Graph complete(std::size_t n) {
  require(n >= 1, "complete needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back(make_edge(i, j));
  return Graph::build(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, "complete_bipartite needs a, b >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) edges.push_back(make_edge(i, a + j));
  return Graph::build(a + b, edges);
}

Graph prism(std::size_t n) {
  require(n >= 3, "prism needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  for (std::size_t i = 0; i < n; ++i) edges.push_back(make_edge(n + i, n + (i + 1) % n));
  for (std::size_t i = 0; i < n; ++i) edges.push_back(make_edge(i, n + i));
  return Graph::build(2 * n, edges);
}

Graph circulant(const CirculantSpec& spec) {
  const std::size_t n = spec.n;
  require(n >= 1, "circulant needs n >= 1");
  const std::size_t limit = (n + 1) / 2; // ceil(n/2)
  std::set<std::size_t> seen;
  std::vector<Edge> edges;
  for (std::size_t s : spec.connections) {
    require(s >= 1 && s < limit, "circulant connection " + std::to_string(s) +
                                     " must lie in 1.." + std::to_string(limit - 1));
    require(seen.insert(s).second, "circulant connection " + std::to_string(s) + " repeated");
    for (std::size_t i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + s) % n));
  }
  return Graph::build(n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 5; ++i) edges.push_back(make_edge(i, (i + 1) % 5));
  for (std::size_t i = 0; i < 5; ++i) edges.push_back(make_edge(i, i + 5));
  for (std::size_t i = 0; i < 5; ++i) edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
  return Graph::build(10, edges);
}

Graph random_regular(const RandomRegularSpec& spec) {
  const std::size_t n = spec.n;
  const std::size_t r = spec.r;
  require(n >= 1, "random_regular needs n >= 1");
  require(r < n, "random_regular needs r < n");
  require((n * r) % 2 == 0, "random_regular needs n*r even");

  Rng rng(spec.seed);
  std::vector<Vertex> stubs;
  stubs.reserve(n * r);
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  constexpr int kMaxAttempts = 1'000'000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    stubs.clear();
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t j = 0; j < r; ++j) stubs.push_back(static_cast<Vertex>(v));
    rng.shuffle(std::span<Vertex>(stubs));

    edges.clear();
    seen.clear();
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      const Vertex u = stubs[i];
      const Vertex v = stubs[i + 1];
      const auto key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
      if (u == v || !seen.insert(key).second) {
        ok = false;
        break;
      }
      edges.push_back({u, v});
    }
    if (ok) return Graph::build(n, edges);
  }
  throw PreconditionError("random_regular: pairing model did not produce a simple graph");
}

std::size_t parse_count(std::string_view field, std::string_view text) {
  std::size_t value = 0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc{} || ptr != last) {
    throw PreconditionError("bad number '" + std::string(field) + "' in generator spec '" +
                            std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::size_t expected_fields(std::string_view kind, std::string_view text) {
  if (kind == "cycle" || kind == "complete" || kind == "prism") return 1;
  if (kind == "complete_bipartite" || kind == "circulant") return 2;
  if (kind == "random_regular") return 3;
  if (kind == "petersen") return 0;
  throw PreconditionError("unknown graph family '" + std::string(kind) + "' in '" +
                          std::string(text) + "'");
}

GeneratorSpec from_fields(std::string_view kind, const std::vector<std::string_view>& f,
                          std::string_view text) {
  if (kind == "cycle") return CycleSpec{parse_count(f[0], text)};
  if (kind == "complete") return CompleteSpec{parse_count(f[0], text)};
  if (kind == "prism") return PrismSpec{parse_count(f[0], text)};
  if (kind == "complete_bipartite")
    return CompleteBipartiteSpec{parse_count(f[0], text), parse_count(f[1], text)};
  if (kind == "petersen") return PetersenSpec{};
  if (kind == "random_regular")
    return RandomRegularSpec{parse_count(f[0], text), parse_count(f[1], text),
                             static_cast<std::uint64_t>(parse_count(f[2], text))};
  CirculantSpec spec{parse_count(f[0], text), {}};
  for (std::string_view s : split(f[1], ',')) spec.connections.push_back(parse_count(s, text));
  return spec;
}

} // namespace

Graph generate(const GeneratorSpec& spec) {
  return std::visit(
      overloaded{
          [](const CycleSpec& s) { return cycle(s.n); },
          [](const CompleteSpec& s) { return complete(s.n); },
          [](const CompleteBipartiteSpec& s) { return complete_bipartite(s.a, s.b); },
          [](const PrismSpec& s) { return prism(s.n); },
          [](const CirculantSpec& s) { return circulant(s); },
          [](const PetersenSpec&) { return petersen(); },
          [](const RandomRegularSpec& s) { return random_regular(s); },
      },
      spec);
}

std::optional<std::size_t> expected_regularity(const GeneratorSpec& spec) {
  return std::visit(
      overloaded{
          [](const CycleSpec&) -> std::optional<std::size_t> { return 2; },
          [](const CompleteSpec& s) -> std::optional<std::size_t> { return s.n - 1; },
          [](const CompleteBipartiteSpec& s) -> std::optional<std::size_t> {
            if (s.a != s.b) return std::nullopt;
            return s.a;
          },
          [](const PrismSpec&) -> std::optional<std::size_t> { return 3; },
          [](const CirculantSpec& s) -> std::optional<std::size_t> {
            return 2 * s.connections.size();
          },
          [](const PetersenSpec&) -> std::optional<std::size_t> { return 3; },
          [](const RandomRegularSpec& s) -> std::optional<std::size_t> { return s.r; },
      },
      spec);
}

GeneratorSpec parse_generator_spec(std::string_view text) {
  const auto parts = split(text, ':');
  const std::string_view kind = parts[0];
  const std::size_t want = expected_fields(kind, text);
  if (parts.size() - 1 != want) {
    throw PreconditionError("generator '" + std::string(kind) + "' takes " +
                            std::to_string(want) + " parameter(s): '" + std::string(text) + "'");
  }
  return from_fields(kind, {parts.begin() + 1, parts.end()}, text);
}

std::string to_string(const GeneratorSpec& spec) {
  std::ostringstream out;
  std::visit(overloaded{
                 [&](const CycleSpec& s) { out << "cycle:" << s.n; },
                 [&](const CompleteSpec& s) { out << "complete:" << s.n; },
                 [&](const CompleteBipartiteSpec& s) {
                   out << "complete_bipartite:" << s.a << ':' << s.b;
                 },
                 [&](const PrismSpec& s) { out << "prism:" << s.n; },
                 [&](const CirculantSpec& s) {
                   out << "circulant:" << s.n << ':';
                   for (std::size_t i = 0; i < s.connections.size(); ++i)
                     out << (i ? "," : "") << s.connections[i];
                 },
                 [&](const PetersenSpec&) { out << "petersen"; },
                 [&](const RandomRegularSpec& s) {
                   out << "random_regular:" << s.n << ':' << s.r << ':' << s.seed;
                 },
             },
             spec);
  return out.str();
}

std::vector<GeneratorSpec> expand_family(std::string_view text) {
  const auto parts = split(text, ':');
  const std::string_view kind = parts[0];
  const std::size_t want = expected_fields(kind, text);
  if (parts.size() - 1 != want) {
    throw PreconditionError("generator '" + std::string(kind) + "' takes " +
                            std::to_string(want) + " parameter(s): '" + std::string(text) + "'");
  }

  // Each field expands to a list of literal strings.
  std::vector<std::vector<std::string>> choices;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string_view field = parts[i];
    const std::size_t dots = field.find("..");
    if (dots == std::string_view::npos) {
      choices.push_back({std::string(field)});
      continue;
    }
    const std::size_t lo = parse_count(field.substr(0, dots), text);
    const std::size_t hi = parse_count(field.substr(dots + 2), text);
    if (lo > hi) throw PreconditionError("empty range '" + std::string(field) + "'");
    std::vector<std::string> values;
    for (std::size_t v = lo; v <= hi; ++v) values.push_back(std::to_string(v));
    choices.push_back(std::move(values));
  }

  std::vector<GeneratorSpec> out;
  std::vector<std::size_t> at(choices.size(), 0);
  for (;;) {
    std::vector<std::string_view> fields;
    for (std::size_t i = 0; i < choices.size(); ++i) fields.push_back(choices[i][at[i]]);
    out.push_back(from_fields(kind, fields, text));
    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++at[i] < choices[i].size()) break;
      at[i] = 0;
      if (i == 0) return out;
    }
    if (choices.empty()) return out;
  }
}

} // namespace ivspec
