#include "cactus_forge/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "cactus_forge/analyzer.hpp"
#include "cactus_forge/disjoint_sets.hpp"
#include "cactus_forge/error.hpp"
#include "cactus_forge/oracle.hpp"
#include "cactus_forge/rng.hpp"

namespace cactus_forge {

namespace {

template <class F>
double timed_ms(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::vector<EdgeId> edges_by_endpoints(const PlaneGraph& g) {
  std::vector<EdgeId> order(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) order[e] = e;
  std::sort(order.begin(), order.end(),
            [&](EdgeId a, EdgeId b) { return g.edge_endpoints(a) < g.edge_endpoints(b); });
  return order;
}

}  // namespace

MpsResult mps_pipeline(const PlaneGraph& g, const SearchConfig& cfg) {
  auto [cactus, trace] = local_search(g, cfg);
  MpsResult out;
  out.n = g.vertex_count();
  out.input_edges = g.edge_count();
  out.components = g.component_count();
  out.delta = cactus.size();
  out.cactus = cactus.vertex_triples();

  std::vector<bool> keep(g.edge_count(), false);
  DisjointSets joined(g.vertex_count());
  for (TriangleId t : cactus.triangles()) {
    for (EdgeId e : g.candidates()[t].edges) {
      keep[e] = true;
      auto [a, b] = g.edge_endpoints(e);
      joined.unite(a, b);
    }
  }
  // Forest over cactus components, smallest endpoint pairs first.
  for (EdgeId e : edges_by_endpoints(g)) {
    auto [a, b] = g.edge_endpoints(e);
    if (joined.unite(a, b)) keep[e] = true;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (keep[e]) out.edges.push_back(e);
  }

  out.rows.resize(out.components);
  for (int c = 0; c < out.components; ++c) out.rows[c].component = c;
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++out.rows[g.component_of(v)].n;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    MpsComponentRow& row = out.rows[g.component_of(g.edge_endpoints(e).first)];
    ++row.input_edges;
    if (keep[e]) ++row.output_edges;
  }
  for (TriangleId t : cactus.triangles()) ++out.rows[g.component_of(g.candidates()[t].vertices[0])].delta;
  for (MpsComponentRow& row : out.rows) row.count_matches = row.output_edges == row.n - 1 + row.delta;

  const int m = out.edge_count();
  out.count_matches = m == out.n - out.components + out.delta;
  out.spanning = joined.set_count() == out.components;
  out.is_triangulation = out.n >= 3 && out.input_edges == 3 * out.n - 6;
  out.four_ninths = out.n >= 3 && 9 * m >= 4 * (3 * out.n - 6);
  out.ratio_vs_input = out.input_edges == 0 ? 1.0 : static_cast<double>(m) / out.input_edges;
  out.ratio_vs_triangulation = out.n >= 3 ? static_cast<double>(m) / (3 * out.n - 6) : 1.0;
  return out;
}

MptResult mpt_pipeline(const PlaneGraph& g, const SearchConfig& cfg) {
  auto [cactus, trace] = local_search(g, cfg);
  MptResult out;
  out.cactus = cactus.vertex_triples();
  out.delta = cactus.size();
  out.trace = std::move(trace);
  std::vector<bool> keep(g.edge_count(), false);
  for (TriangleId t : cactus.triangles()) {
    const Triangle& tri = g.candidates()[t];
    for (EdgeId e : tri.edges) keep[e] = true;
    if (g.face(tri.primary_face).is_outer) out.uses_outer_face = true;
  }
  out.output_triangles = triangular_faces(edge_subgraph(g, keep).graph).internal;
  out.f3_internal = triangular_faces(g).internal;
  out.recount_matches = out.output_triangles + (out.uses_outer_face ? 1 : 0) == out.delta;
  out.sixth_bound = 6 * out.delta >= out.f3_internal;
  out.ratio = out.f3_internal == 0 ? 1.0 : static_cast<double>(out.delta) / out.f3_internal;
  return out;
}

std::string instance_id(const GeneratorSpec& spec) {
  const std::string n = std::to_string(spec.n);
  if (spec.family == "random_maximal_planar") {
    return "rmp-n" + n + "-s" + std::to_string(spec.seed) + "-f" + std::to_string(spec.flips);
  }
  if (spec.family == "apollonian") return "apollonian-n" + n + "-s" + std::to_string(spec.seed);
  if (spec.family == "platonic") return "platonic-" + spec.name;
  if (spec.family == "grid_triangulation") return "grid-" + n + "x" + std::to_string(spec.height);
  return spec.family + "-" + n;
}

std::vector<CorpusEntry> standard_corpus(int random_count, std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  Rng rng(seed);
  auto add = [&](GeneratorSpec spec) { out.push_back({instance_id(spec), std::move(spec)}); };
  for (int i = 0; i < random_count; ++i) {
    GeneratorSpec spec;
    spec.family = "random_maximal_planar";
    spec.n = 4 + static_cast<int>(rng.below(61));
    spec.seed = seed * 100003 + static_cast<std::uint64_t>(i);
    spec.flips = static_cast<int>(rng.below(3 * spec.n));
    add(spec);
  }
  for (const char* family : {"wheel", "fan"}) {
    for (int k = std::string(family) == "wheel" ? 4 : 3; k <= 12; ++k) {
      GeneratorSpec spec;
      spec.family = family;
      spec.n = k;
      add(spec);
    }
  }
  for (const char* name : {"tetrahedron", "octahedron", "icosahedron"}) {
    GeneratorSpec spec;
    spec.family = "platonic";
    spec.name = name;
    add(spec);
  }
  for (auto [w, h] : {std::pair{2, 2}, {3, 3}, {3, 4}, {4, 4}, {6, 5}}) {
    GeneratorSpec spec;
    spec.family = "grid_triangulation";
    spec.n = w;
    spec.height = h;
    add(spec);
  }
  return out;
}

std::vector<CorpusEntry> corpus_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::malformed_input, "corpus is not a JSON array");
  std::vector<CorpusEntry> out;
  for (const Json& item : j) {
    GeneratorSpec spec = generator_spec_from_json(item);
    std::string id = item.contains("id") && item["id"].is_string() ? item["id"].get<std::string>()
                                                                    : instance_id(spec);
    out.push_back({std::move(id), std::move(spec)});
  }
  return out;
}

int bench_threads(const BenchConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("CACTUS_FORGE_THREADS")) {
    const int k = std::atoi(env);
    if (k > 0) return k;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

BenchRow bench_instance(const std::string& id, const PlaneGraph& g, const BenchConfig& cfg,
                        std::vector<BenchFailure>& failures, Json* report) {
  auto fail = [&](std::string check, std::string detail, FailureClass cls = FailureClass::bound) {
    failures.push_back({id, std::move(check), std::move(detail), cls});
  };
  BenchRow row;
  row.id = id;
  row.n = g.vertex_count();
  row.edges = g.edge_count();
  const TriangleCounts f3 = triangular_faces(g);
  row.f3_internal = f3.internal;
  row.f3_all = f3.all;

  row.ms_greedy = timed_ms([&] { row.delta_greedy = greedy_initial(g, cfg.seed).size(); });

  SearchConfig one;
  one.seed = cfg.seed;
  one.swap_size = 1;
  std::optional<TriangularCactus> c1;
  row.ms_1swap = timed_ms([&] { c1 = local_search(g, one).first; });
  row.delta_1swap = c1->size();
  if (!verify_local_optimality(g, *c1, 1).optimal) fail("one_swap_optimal", "1-swap search output is improvable");

  SearchConfig two = one;
  two.swap_size = 2;
  std::optional<TriangularCactus> c2;
  row.ms_2swap = timed_ms([&] { c2 = local_search(g, two).first; });
  row.delta_2swap = c2->size();
  row.slack = 6 * row.delta_2swap - row.f3_internal;
  if (row.slack < 0) {
    fail("main_bound", "6*" + std::to_string(row.delta_2swap) + " < " + std::to_string(row.f3_internal));
  }

  if (cfg.run_oracle && static_cast<int>(g.candidates().size()) <= kOracleCandidateGuard) {
    OracleResult exact;
    row.ms_oracle = timed_ms([&] { exact = exact_beta_faces(g, cfg.oracle_budget); });
    if (exact.exhausted) {
      row.beta_faces = exact.optimum;
      if (row.delta_2swap > exact.optimum) {
        fail("oracle_dominance", std::to_string(row.delta_2swap) + " > " + std::to_string(exact.optimum));
      }
      if (2 * row.delta_greedy < exact.optimum) {
        fail("maximality_factor", "2*" + std::to_string(row.delta_greedy) + " < " + std::to_string(exact.optimum));
      }
    }
  }

  AnalyzerOptions options;
  options.strict_structure = false;
  options.throw_on_identity_violation = false;
  AnalysisReport analysis = analyze(g, *c2, options);
  if (!analysis.verified_optimal) fail("two_swap_optimal", "2-swap search output is improvable");
  auto collect = [&](const std::vector<Verdict>& verdicts, const std::string& where) {
    for (const Verdict& v : verdicts) {
      if (!v.failed() || v.kind == VerdictKind::report) continue;
      if (v.kind == VerdictKind::structural && !analysis.verified_optimal) continue;
      const std::string detail = where + v.lhs.str() + " " + v.relation + " " + v.rhs.str() +
                                 (v.detail.empty() ? "" : ": " + v.detail);
      fail(v.name, detail, v.kind == VerdictKind::identity ? FailureClass::identity : FailureClass::bound);
    }
  };
  collect(analysis.verdicts, "");
  for (const ComponentReport& cr : analysis.components) {
    collect(cr.verdicts, "component at " + std::to_string(cr.component.front()) + ": expected ");
  }
  if (report) {
    *report = report_to_json(g, analysis);
    (*report)["id"] = id;
  }
  return row;
}

BenchResult verify_corpus(const std::vector<CorpusEntry>& corpus, const BenchConfig& cfg) {
  const std::size_t count = corpus.size();
  BenchResult out;
  out.rows.resize(count);
  out.reports.resize(count);
  std::vector<std::vector<BenchFailure>> row_failures(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const CorpusEntry& entry = corpus[i];
      try {
        PlaneGraph g = generate(entry.spec);
        out.rows[i] = bench_instance(entry.id, g, cfg, row_failures[i], &out.reports[i]);
      } catch (const std::exception& e) {
        out.rows[i].id = entry.id;
        out.reports[i] = Json{{"id", entry.id}, {"error", e.what()}};
        row_failures[i].push_back({entry.id, "error", e.what(), FailureClass::identity});
      }
    }
  };
  const int threads = std::min<int>(bench_threads(cfg), static_cast<int>(std::max<std::size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (auto& fs : row_failures) out.failures.insert(out.failures.end(), fs.begin(), fs.end());
  return out;
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool timings) {
  std::string csv =
      "id,n,edges,f3_internal,f3_all,delta_greedy,delta_1swap,delta_2swap,beta_faces,slack";
  if (timings) csv += ",ms_greedy,ms_1swap,ms_2swap,ms_oracle";
  csv += "\n";
  for (const BenchRow& r : rows) {
    csv += r.id + "," + std::to_string(r.n) + "," + std::to_string(r.edges) + "," +
           std::to_string(r.f3_internal) + "," + std::to_string(r.f3_all) + "," +
           std::to_string(r.delta_greedy) + "," + std::to_string(r.delta_1swap) + "," +
           std::to_string(r.delta_2swap) + "," + (r.beta_faces ? std::to_string(*r.beta_faces) : "") +
           "," + std::to_string(r.slack);
    if (timings) {
      char buf[128];
      std::snprintf(buf, sizeof buf, ",%.3f,%.3f,%.3f,%.3f", r.ms_greedy, r.ms_1swap, r.ms_2swap, r.ms_oracle);
      csv += buf;
    }
    csv += "\n";
  }
  return csv;
}

int bench_exit_code(const BenchResult& result) {
  if (result.failures.empty()) return 0;
  const bool identity = std::any_of(result.failures.begin(), result.failures.end(),
                                    [](const BenchFailure& f) { return f.failure_class == FailureClass::identity; });
  return identity ? 3 : 2;
}

}  // namespace cactus_forge
