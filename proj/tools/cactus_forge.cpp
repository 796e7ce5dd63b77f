#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cactus_forge/analyzer.hpp"
#include "cactus_forge/error.hpp"
#include "cactus_forge/generators.hpp"
#include "cactus_forge/io.hpp"
#include "cactus_forge/local_search.hpp"
#include "cactus_forge/oracle.hpp"
#include "cactus_forge/pipeline.hpp"

using namespace cactus_forge;

namespace {

enum Exit { kClean = 0, kUsage = 1, kBound = 2, kIdentity = 3, kInput = 4 };

// Raised for anything wrong with files named on the command line.
struct InputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto loading(const std::string& path, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    throw InputFailure(path + ": " + e.what());
  }
}

PlaneGraph load_instance(const std::string& path) {
  return loading(path, [&] { return instance_from_json(read_json_file(path)); });
}

void emit(const std::string& path, const Json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_file(path, j);
  }
}

void emit_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

Pivot parse_pivot(const std::string& s) { return s == "best" ? Pivot::best_improvement : Pivot::first_improvement; }

struct SearchFlags {
  int t = 2;
  std::uint64_t seed = 0;
  std::string pivot = "first";
  std::optional<int> cap;

  void attach(CLI::App* cmd) {
    cmd->add_option("--t", t, "swap size")->check(CLI::IsMember({1, 2}));
    cmd->add_option("--seed", seed, "seed for the greedy start");
    cmd->add_option("--pivot", pivot, "first or best improvement")->check(CLI::IsMember({"first", "best"}));
    cmd->add_option("--cap", cap, "iteration cap")->check(CLI::PositiveNumber);
  }

  SearchConfig config() const {
    SearchConfig cfg;
    cfg.swap_size = t;
    cfg.seed = seed;
    cfg.pivot = parse_pivot(pivot);
    cfg.iteration_cap = cap;
    return cfg;
  }
};

Json mps_json(const PlaneGraph& g, const MpsResult& r) {
  Json edges = Json::array();
  for (EdgeId e : r.edges) {
    auto [a, b] = g.edge_endpoints(e);
    edges.push_back({a, b});
  }
  Json rows = Json::array();
  for (const MpsComponentRow& row : r.rows) {
    rows.push_back({{"component", row.component},
                    {"n", row.n},
                    {"input_edges", row.input_edges},
                    {"delta", row.delta},
                    {"output_edges", row.output_edges},
                    {"count_matches", row.count_matches}});
  }
  return {{"n", r.n},
          {"input_edges", r.input_edges},
          {"components", r.components},
          {"delta", r.delta},
          {"output_edges", r.edge_count()},
          {"count_matches", r.count_matches},
          {"spanning", r.spanning},
          {"is_triangulation", r.is_triangulation},
          {"four_ninths", r.four_ninths},
          {"ratio_vs_input", r.ratio_vs_input},
          {"ratio_vs_triangulation", r.ratio_vs_triangulation},
          {"cactus", r.cactus},
          {"edges", std::move(edges)},
          {"rows", std::move(rows)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangular cactus local search, bound verification and MPS/MPT pipelines"};
  app.require_subcommand(1);
  int exit_code = kClean;

  GeneratorSpec gen;
  std::string gen_out;
  auto* generate_cmd = app.add_subcommand("generate", "write a generated plane graph");
  generate_cmd->add_option("--family", gen.family, "random_maximal_planar, apollonian, wheel, fan, platonic, grid_triangulation")
      ->required();
  generate_cmd->add_option("--n", gen.n, "vertex count, or grid width");
  generate_cmd->add_option("--height", gen.height, "grid height");
  generate_cmd->add_option("--seed", gen.seed);
  generate_cmd->add_option("--flips", gen.flips, "successful random diagonal flips");
  generate_cmd->add_option("--name", gen.name, "platonic solid");
  generate_cmd->add_option("--out", gen_out, "output file, stdout when omitted");
  generate_cmd->callback([&] { emit(gen_out, instance_to_json(generate(gen))); });

  std::string in_path, out_path, trace_path, cactus_path;
  SearchFlags search;
  auto* solve_cmd = app.add_subcommand("solve", "run the local search");
  solve_cmd->add_option("--in", in_path)->required();
  search.attach(solve_cmd);
  solve_cmd->add_option("--out", out_path, "cactus file, stdout when omitted");
  solve_cmd->add_option("--trace", trace_path, "search trace file");
  solve_cmd->callback([&] {
    PlaneGraph g = load_instance(in_path);
    auto [c, trace] = local_search(g, search.config());
    emit(out_path, cactus_to_json(c));
    if (!trace_path.empty()) write_json_file(trace_path, trace_to_json(g, trace));
    std::cerr << "delta " << c.size() << " after " << trace.moves.size() << " moves\n";
  });

  std::string mode = "faces";
  std::int64_t budget = kDefaultNodeBudget;
  bool allow_large = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact maximum cactus by branch and bound");
  oracle_cmd->add_option("--in", in_path)->required();
  oracle_cmd->add_option("--mode", mode, "faces or all")->check(CLI::IsMember({"faces", "all"}));
  oracle_cmd->add_option("--budget", budget, "node budget")->check(CLI::PositiveNumber);
  oracle_cmd->add_flag("--allow-large", allow_large, "lift the candidate guard");
  oracle_cmd->add_option("--out", out_path);
  oracle_cmd->callback([&] {
    PlaneGraph g = load_instance(in_path);
    OracleResult r = mode == "faces" ? exact_beta_faces(g, budget, allow_large)
                                     : exact_beta_all_triangles(g, budget, allow_large);
    Json j = oracle_to_json(r);
    j["mode"] = mode;
    emit(out_path, j);
  });

  bool per_face = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "per-component accounting and verdicts");
  analyze_cmd->add_option("--in", in_path)->required();
  analyze_cmd->add_option("--cactus", cactus_path)->required();
  analyze_cmd->add_option("--out", out_path);
  analyze_cmd->add_flag("--per-face", per_face, "include super-face, triangle and edge tables");
  analyze_cmd->callback([&] {
    PlaneGraph g = load_instance(in_path);
    TriangularCactus c = loading(cactus_path, [&] { return cactus_from_json(g, read_json_file(cactus_path)); });
    AnalyzerOptions options;
    options.strict_structure = false;
    options.throw_on_identity_violation = false;
    AnalysisReport rep = analyze(g, c, options);
    emit(out_path, report_to_json(g, rep, per_face));
    const bool structural = rep.verified_optimal && rep.any_failed(VerdictKind::structural);
    if (rep.any_failed(VerdictKind::identity)) {
      exit_code = kIdentity;
    } else if (rep.any_failed(VerdictKind::bound) || rep.any_failed(VerdictKind::conditional) || structural) {
      exit_code = kBound;
    }
  });

  auto* mps_cmd = app.add_subcommand("mps", "planar subgraph from cactus plus spanning forest");
  mps_cmd->add_option("--in", in_path)->required();
  search.attach(mps_cmd);
  mps_cmd->add_option("--out", out_path);
  mps_cmd->callback([&] {
    PlaneGraph g = load_instance(in_path);
    MpsResult r = mps_pipeline(g, search.config());
    emit(out_path, mps_json(g, r));
    const bool ratio_gate = search.t == 2 && r.is_triangulation && !r.four_ninths;
    if (!r.count_matches || !r.spanning || ratio_gate) exit_code = kBound;
  });

  auto* mpt_cmd = app.add_subcommand("mpt", "triangle-maximising subgraph from the cactus");
  mpt_cmd->add_option("--in", in_path)->required();
  search.attach(mpt_cmd);
  mpt_cmd->add_option("--out", out_path);
  mpt_cmd->callback([&] {
    PlaneGraph g = load_instance(in_path);
    MptResult r = mpt_pipeline(g, search.config());
    emit(out_path, {{"delta", r.delta},
                    {"output_triangles", r.output_triangles},
                    {"uses_outer_face", r.uses_outer_face},
                    {"f3_internal", r.f3_internal},
                    {"recount_matches", r.recount_matches},
                    {"sixth_bound", r.sixth_bound},
                    {"ratio", r.ratio},
                    {"cactus", r.cactus}});
    if (!r.recount_matches) {
      exit_code = kIdentity;
    } else if (search.t == 2 && !r.sixth_bound) {
      exit_code = kBound;
    }
  });

  std::string corpus_path, csv_path, sidecar_path;
  int random_count = 200;
  bool timings = false, no_oracle = false;
  BenchConfig bench;
  auto* bench_cmd = app.add_subcommand("bench", "verify the bounds over a corpus");
  bench_cmd->add_option("--corpus", corpus_path, "JSON list of generator specs; standard corpus when omitted");
  bench_cmd->add_option("--random", random_count, "random triangulations in the standard corpus")
      ->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--budget", bench.oracle_budget, "oracle node budget")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--threads", bench.threads, "worker cap, overrides CACTUS_FORGE_THREADS")
      ->check(CLI::NonNegativeNumber);
  bench_cmd->add_flag("--no-oracle", no_oracle);
  bench_cmd->add_flag("--timings", timings, "append wall-time columns (output no longer reproducible)");
  bench_cmd->add_option("--csv", csv_path, "CSV file, stdout when omitted");
  bench_cmd->add_option("--json", sidecar_path, "analyzer report sidecar");
  bench_cmd->callback([&] {
    std::vector<CorpusEntry> corpus =
        corpus_path.empty() ? standard_corpus(random_count, bench.seed)
                            : loading(corpus_path, [&] { return corpus_from_json(read_json_file(corpus_path)); });
    bench.run_oracle = !no_oracle;
    BenchResult r = verify_corpus(corpus, bench);
    emit_text(csv_path, bench_csv(r.rows, timings));
    if (!sidecar_path.empty()) {
      Json failures = Json::array();
      for (const BenchFailure& f : r.failures) {
        failures.push_back({{"id", f.id},
                            {"check", f.check},
                            {"detail", f.detail},
                            {"class", f.failure_class == FailureClass::identity ? "identity" : "bound"}});
      }
      write_json_file(sidecar_path, {{"reports", r.reports}, {"failures", std::move(failures)}});
    }
    for (const BenchFailure& f : r.failures) std::cerr << f.id << ": " << f.check << ": " << f.detail << "\n";
    std::cerr << r.rows.size() << " rows, " << r.failures.size() << " failures\n";
    exit_code = bench_exit_code(r);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kClean : kUsage;
  } catch (const InputFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::io_failure:
        return kInput;
      case ErrorCode::identity_violation:
        return kIdentity;
      default:
        return kUsage;
    }
  }
  return exit_code;
}
