#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cactus_forge/generators.hpp"
#include "cactus_forge/io.hpp"
#include "cactus_forge/local_search.hpp"
#include "cactus_forge/plane_graph.hpp"

namespace cactus_forge {

// One connected component of the input.
struct MpsComponentRow {
  int component = 0;
  int n = 0;
  int input_edges = 0;
  int delta = 0;
  int output_edges = 0;
  bool count_matches = false;  // output_edges == n - 1 + delta
};

// Cactus plus a spanning forest of the graph whose nodes are cactus components.
struct MpsResult {
  std::vector<EdgeId> edges;  // ascending
  int n = 0;
  int input_edges = 0;
  int components = 0;
  int delta = 0;
  std::vector<std::array<Vertex, 3>> cactus;
  std::vector<MpsComponentRow> rows;
  bool count_matches = false;      // |edges| == n - components + delta
  bool spanning = false;           // same connected components as the input
  bool is_triangulation = false;   // |E| == 3n - 6 and n >= 3
  bool four_ninths = false;        // 9 |edges| >= 4 (3n - 6), only meaningful for triangulations
  double ratio_vs_input = 0.0;     // |edges| / |E|
  double ratio_vs_triangulation = 0.0;  // |edges| / (3n - 6)

  int edge_count() const { return static_cast<int>(edges.size()); }
};

MpsResult mps_pipeline(const PlaneGraph& g, const SearchConfig& cfg = {});

struct MptResult {
  std::vector<std::array<Vertex, 3>> cactus;
  int delta = 0;
  int output_triangles = 0;  // internal triangular faces of the cactus re-embedded alone
  int f3_internal = 0;
  // A cactus triangle whose only face is G's outer face stays outer in the
  // subgraph and is not counted as internal there.
  bool uses_outer_face = false;
  bool recount_matches = false;  // output_triangles + uses_outer_face == delta
  bool sixth_bound = false;      // 6 delta >= f3_internal
  double ratio = 0.0;            // delta / f3_internal, 1 when f3_internal == 0
  SearchTrace trace;
};

MptResult mpt_pipeline(const PlaneGraph& g, const SearchConfig& cfg = {});

struct CorpusEntry {
  std::string id;
  GeneratorSpec spec;
};

// Readable id such as "rmp-n32-s9-f100" or "platonic-octahedron".
std::string instance_id(const GeneratorSpec& spec);

// random_count seeded random triangulations with n in [4, 64] and a
// seed-dependent flip count, then wheels, fans, the platonic solids and a
// few grid triangulations.
std::vector<CorpusEntry> standard_corpus(int random_count, std::uint64_t seed);

std::vector<CorpusEntry> corpus_from_json(const Json& j);

struct BenchConfig {
  std::uint64_t seed = 0;
  bool run_oracle = true;
  std::int64_t oracle_budget = kDefaultNodeBudget;
  int threads = 0;  // 0: CACTUS_FORGE_THREADS, else hardware concurrency
};

struct BenchRow {
  std::string id;
  int n = 0;
  int edges = 0;
  int f3_internal = 0;
  int f3_all = 0;
  int delta_greedy = 0;
  int delta_1swap = 0;
  int delta_2swap = 0;
  std::optional<int> beta_faces;  // set when the oracle ran to completion
  int slack = 0;                  // 6 delta_2swap - f3_internal
  double ms_greedy = 0, ms_1swap = 0, ms_2swap = 0, ms_oracle = 0;
};

enum class FailureClass { bound, identity };

struct BenchFailure {
  std::string id;
  std::string check;
  std::string detail;
  FailureClass failure_class = FailureClass::bound;
};

struct BenchResult {
  std::vector<BenchRow> rows;       // corpus order
  std::vector<Json> reports;        // analyzer report per row, corpus order
  std::vector<BenchFailure> failures;
};

// Worker count: cfg.threads, else CACTUS_FORGE_THREADS, else hardware concurrency.
int bench_threads(const BenchConfig& cfg);

BenchRow bench_instance(const std::string& id, const PlaneGraph& g, const BenchConfig& cfg,
                        std::vector<BenchFailure>& failures, Json* report);

// Rows are computed concurrently and collected in corpus order; per-row
// errors become failures and never stop the sweep.
BenchResult verify_corpus(const std::vector<CorpusEntry>& corpus, const BenchConfig& cfg);

std::string bench_csv(const std::vector<BenchRow>& rows, bool timings);

// 0 clean, 3 when any failure is of the identity class, else 2.
int bench_exit_code(const BenchResult& result);

}  // namespace cactus_forge
