// Acceptance suite: one pass/fail line per criterion, exit status 0 only when
// every criterion passes. Thresholds are exact (no tolerances).

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ivspec/bounds.hpp"
#include "ivspec/generators.hpp"
#include "ivspec/io.hpp"
#include "ivspec/rng.hpp"
#include "ivspec/search.hpp"
#include "oracles.hpp"

namespace {

using namespace ivspec;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ivspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

SearchConfig full_enumeration() {
  SearchConfig cfg;
  cfg.prune = false;
  cfg.symmetry_reduction = false;
  cfg.stop_at_bound = false;
  return cfg;
}

// Shared by criteria 4 and 5.
struct SurrAudit {
  std::uint64_t labelings = 0;
  std::uint64_t components = 0;
  std::uint64_t failures = 0;

  void add(const BoundReport& r) {
    if (r.v_int.vertices.empty()) return;
    ++labelings;
    components += r.surr_edge_counts.size();
    bool ok = r.disjointness_ok && r.union_within_edges && r.surr_counts_ok.value_or(false);
    for (const SurrCount& c : r.surr_edge_counts) ok = ok && c.ok();
    failures += !ok;
  }
};

SurrAudit fuzz_audit;
SurrAudit exhaustive_audit;

Verdict cycle_tightness() {
  Verdict v;
  const auto start = Clock::now();
  for (std::size_t n = 3; n <= 9; ++n) {
    const CliResult r = run_cli({"maximize", "gen:cycle:" + std::to_string(n), "--mode", "exhaustive"});
    v.require(r.code == 0, "exit code for C" + std::to_string(n) + ": " + r.err);
    if (r.code != 0) continue;
    const Json j = Json::parse(r.out);
    const std::size_t best = j["best_size"];
    v.require(best == n - 1 && best == corollary_bound(2, n),
              "C" + std::to_string(n) + " best_size " + std::to_string(best));
    v.require(j["exhaustive"] == true, "exhaustive flag");
    v.detail << " C" << n << "=" << best;
  }
  const double t = seconds_since(start);
  v.require(t < 60.0, "runtime");
  v.detail << " (" << t << " s)";
  return v;
}

Verdict k4_exactness() {
  Verdict v;
  const auto start = Clock::now();
  const Graph k4 = generate(CompleteSpec{4});
  const SearchOutcome all = exhaustive_max(k4, full_enumeration());
  v.require(all.explored == 720, "explored " + std::to_string(all.explored));
  v.require(all.best_size == 2, "best_size " + std::to_string(all.best_size));
  v.require(all.best_size == theorem_bound(3, 4, 1), "bound equality");
  const CliResult r = run_cli({"maximize", "gen:complete:4", "--mode", "exhaustive"});
  v.require(r.code == 0 && Json::parse(r.out)["best_size"] == 2, "cli maximize");
  const double t = seconds_since(start);
  v.require(t < 1.0, "runtime");
  v.detail << " labelings=" << all.explored << " max=" << all.best_size
           << " bound=" << theorem_bound(3, 4, 1) << " (" << t << " s)";
  return v;
}

Verdict k33_bound(const std::filesystem::path& artifact_dir) {
  Verdict v;
  const auto start = Clock::now();
  const Graph k33 = generate(CompleteBipartiteSpec{3, 3});
  const SearchOutcome all = exhaustive_max(k33, full_enumeration());
  const std::size_t limit = corollary_bound(3, 6);
  v.require(all.explored == 362880, "explored " + std::to_string(all.explored));
  v.require(all.best_size <= limit, "best_size " + std::to_string(all.best_size));
  const SearchOutcome pruned = exhaustive_max(k33, SearchConfig{});
  v.require(pruned.best_size == all.best_size, "pruned search disagrees");
  const double t = seconds_since(start);
  v.require(t < 60.0, "runtime");

  std::filesystem::create_directories(artifact_dir);
  Json artifact;
  artifact["graph"] = "complete_bipartite:3:3";
  artifact["labelings_enumerated"] = all.explored;
  artifact["achieved_max"] = all.best_size;
  artifact["corollary_bound"] = limit;
  artifact["witness_labels"] = to_json(all)["witness_labels"];
  std::ofstream(artifact_dir / "k33_exhaustive.json") << artifact.dump(2) << '\n';

  v.detail << " labelings=" << all.explored << " achieved max=" << all.best_size
           << " <= bound " << limit << " (" << t << " s; recorded in "
           << (artifact_dir / "k33_exhaustive.json").string() << ")";
  return v;
}

Verdict proposition_fuzz() {
  Verdict v;
  const auto start = Clock::now();
  const std::size_t sizes[] = {8, 10, 12};
  std::uint64_t trials = 0, prop = 0, thm = 0, nonempty = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate(RandomRegularSpec{sizes[seed % 3], 3, seed});
    v.require(regularity(g) == 3u, "graph not cubic");
    // 20 graphs x 500 labelings = 10,000; audit every labeling's report.
    Rng rng(seed);
    for (int i = 0; i < 500; ++i) {
      const EdgeLabeling phi = random_labeling(g, rng);
      const PropositionVerdict pv = check_proposition(g, phi);
      const BoundReport r = check_theorem(g, phi);
      prop += !pv.holds || !r.proposition_holds;
      thm += !r.theorem_holds;
      nonempty += !r.v_int.vertices.empty();
      fuzz_audit.add(r);
      ++trials;
    }
    // The library routine used by the CLI must agree.
    const FuzzSummary s = fuzz(g, 500, seed);
    v.require(s.passed == 500, "fuzz() reported a violation");
  }
  v.require(trials == 10000, "trial count");
  v.require(prop == 0, std::to_string(prop) + " proposition violations");
  v.require(thm == 0, std::to_string(thm) + " theorem violations");
  const double t = seconds_since(start);
  v.require(t < 60.0, "runtime");
  v.detail << " labelings=" << trials << " (V_int nonempty in " << nonempty
           << ") proposition violations=" << prop << " theorem violations=" << thm << " ("
           << t << " s)";
  return v;
}

Verdict proof_equality_audit() {
  Verdict v;
  const auto start = Clock::now();
  std::vector<GeneratorSpec> graphs;
  for (std::size_t n = 3; n <= 9; ++n) graphs.push_back(CycleSpec{n});
  graphs.push_back(CompleteSpec{4});
  graphs.push_back(CompleteBipartiteSpec{3, 3});
  for (const GeneratorSpec& spec : graphs) {
    const Graph g = generate(spec);
    exhaustive_max(g, full_enumeration(), [&](std::span<const Label> labels, std::size_t count) {
      if (count == 0) return;
      exhaustive_audit.add(check_theorem(g, EdgeLabeling({labels.begin(), labels.end()})));
    });
  }
  v.require(fuzz_audit.labelings > 0, "fuzz audit is empty");
  v.require(fuzz_audit.failures == 0, std::to_string(fuzz_audit.failures) + " fuzz failures");
  v.require(exhaustive_audit.failures == 0,
            std::to_string(exhaustive_audit.failures) + " exhaustive failures");
  v.detail << " fuzz: " << fuzz_audit.labelings << " labelings / " << fuzz_audit.components
           << " components; exhaustive: " << exhaustive_audit.labelings << " labelings / "
           << exhaustive_audit.components << " components; failures="
           << fuzz_audit.failures + exhaustive_audit.failures << " (" << seconds_since(start)
           << " s)";
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  const std::vector<GeneratorSpec> corpus = {CycleSpec{3}, CycleSpec{4}, CycleSpec{5},
                                             CycleSpec{6}, CycleSpec{7}, CompleteSpec{4},
                                             CompleteBipartiteSpec{2, 3}};
  for (const GeneratorSpec& spec : corpus) {
    const Graph g = generate(spec);
    v.require(g.edge_count() <= 7, "corpus graph too large");
    const std::size_t naive = oracle::naive_max(g);
    const std::size_t fast = exhaustive_max(g, SearchConfig{}).best_size;
    v.require(naive == fast, to_string(spec));
    v.detail << ' ' << to_string(spec) << '=' << fast;
  }
  return v;
}

Verdict reflection_invariance() {
  Verdict v;
  Rng rng(777);
  std::vector<Graph> pool;
  for (std::size_t n = 3; n <= 12; ++n) pool.push_back(generate(CycleSpec{n}));
  for (std::uint64_t s = 0; s < 10; ++s) pool.push_back(generate(RandomRegularSpec{12, 3, s}));
  for (std::uint64_t s = 0; s < 5; ++s) pool.push_back(generate(RandomRegularSpec{11, 4, s}));
  pool.push_back(generate(PetersenSpec{}));
  pool.push_back(generate(CompleteBipartiteSpec{2, 5}));
  pool.push_back(generate(CompleteSpec{6}));
  pool.push_back(generate(PrismSpec{5}));
  pool.push_back(generate(CirculantSpec{13, {1, 5}}));
  std::size_t mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const Graph& g = pool[rng.uniform_below(pool.size())];
    const EdgeLabeling phi = random_labeling(g, rng);
    mismatches += interval_vertices(g, phi).size() != interval_vertices(g, reflect(phi)).size();
  }
  v.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  v.detail << " pairs=1000 mismatches=" << mismatches;
  return v;
}

Verdict anneal_determinism() {
  Verdict v;
  const std::vector<std::string> args = {"maximize", "gen:petersen", "--mode", "anneal", "--seed",
                                         "42"};
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  v.require(a.code == 0 && b.code == 0, "exit code: " + a.err);
  v.require(a.out == b.out, "outputs differ");
  if (a.code == 0) {
    const Json j = Json::parse(a.out);
    const std::size_t best = j["best_size"];
    const std::size_t limit = (3 * 10 - 2) / 4;
    v.require(best <= limit, "best_size " + std::to_string(best));
    v.detail << " best_size=" << best << " <= " << limit << ", " << a.out.size()
             << " identical bytes";
  }
  return v;
}

} // namespace

int main(int argc, char** argv) {
  std::filesystem::path artifact_dir = "artifacts";
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--artifact-dir") artifact_dir = argv[i + 1];
  }

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 cycle tightness", cycle_tightness},
      {"2 K4 exactness", k4_exactness},
      {"3 K3,3 bound compliance", [&] { return k33_bound(artifact_dir); }},
      {"4 proposition fuzz", proposition_fuzz},
      {"5 proof-equality audit", proof_equality_audit},
      {"6 oracle equivalence", oracle_equivalence},
      {"7 reflection invariance", reflection_invariance},
      {"8 anneal determinism", anneal_determinism},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " [exception: " << e.what() << "]";
    }
    failed += !v.pass;
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << name << ':' << v.detail.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : "acceptance FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
