#include "cactus_forge/io.hpp"

#include <algorithm>
#include <fstream>

#include "cactus_forge/error.hpp"

namespace cactus_forge {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::malformed_input, what); }

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) malformed(where + " is not an integer");
  return j.get<int>();
}

Json half_json(Half h) {
  if (h.halves() % 2 == 0) return h.halves() / 2;
  return h.to_double();
}

Json triple_json(const std::array<Vertex, 3>& t) { return Json::array({t[0], t[1], t[2]}); }

Json move_json(const PlaneGraph& g, const SwapMove& m) {
  Json out{{"remove", Json::array()}, {"add", Json::array()}};
  for (TriangleId t : m.remove) out["remove"].push_back(triple_json(g.candidates()[t].vertices));
  for (TriangleId t : m.add) out["add"].push_back(triple_json(g.candidates()[t].vertices));
  return out;
}

Json counterexample(const Verdict& v, const std::vector<Vertex>* component) {
  Json c{{"verdict", v.name},
         {"relation", v.relation},
         {"lhs", half_json(v.lhs)},
         {"rhs", half_json(v.rhs)},
         {"detail", v.detail}};
  c["component"] = component ? Json(*component) : Json(nullptr);
  return c;
}

Json verdicts_json(const std::vector<Verdict>& verdicts, const std::vector<Vertex>* component) {
  Json out = Json::array();
  for (const Verdict& v : verdicts) {
    Json j = verdict_to_json(v);
    if (v.failed()) j["counterexample"] = counterexample(v, component);
    out.push_back(std::move(j));
  }
  return out;
}

Json superface_json(const SuperFaceRecord& f) {
  Json j{{"region", f.region},
         {"outer", f.is_outer},
         {"length", f.length()},
         {"occ", f.occ},
         {"free", f.free},
         {"a1_occ", f.a1_occ},
         {"a1_free", f.a1_free},
         {"a2", f.a2},
         {"mu", half_json(f.mu)},
         {"survive", f.survive},
         {"gain", half_json(f.gain)},
         {"contained_faces", f.contained_faces}};
  if (f.labelled) {
    j["p0_base"] = f.p0_base;
    j["p1_base"] = f.p1_base;
    j["p0_free"] = f.p0_free;
    j["p1_free"] = f.p1_free;
    j["label"] = f.label;
    j["friends"] = f.friends;
    j["friendly"] = f.friendly;
  }
  if (f.gain_bound) {
    j["bound_class"] = f.bound_class;
    j["gain_bound"] = half_json(*f.gain_bound);
  }
  Json sides = Json::array();
  for (const BoundarySide& s : f.boundary) {
    sides.push_back({{"edge", s.edge}, {"role", to_string(s.role)}, {"occupied", s.occupied}});
  }
  j["boundary"] = std::move(sides);
  return j;
}

Json triangle_json(const TriangleClass& t) {
  Json j{{"vertices", t.vertices},
         {"type", t.type},
         {"heavy", t.heavy},
         {"edge_support", t.edge_support},
         {"bset_support", t.bset_support},
         {"bset_sizes", {t.bsets[0].size(), t.bsets[1].size(), t.bsets[2].size()}}};
  if (t.heavy) {
    j["base_slot"] = t.base_slot;
    j["free_vertex"] = t.free_vertex;
  }
  return j;
}

Json component_json(const ComponentReport& cr, bool per_face) {
  Json j{{"component", cr.component},
         {"p", cr.p},
         {"q", cr.q},
         {"p_type", cr.p_type},
         {"a_type", cr.a_type},
         {"crosses", cr.crosses},
         {"outer_length", cr.outer_length},
         {"outer_occupied", cr.outer_occupied},
         {"phi", cr.phi},
         {"all_heavy", cr.all_heavy},
         {"verified_optimal", cr.verified_optimal},
         {"outer_is_cactus_face", cr.outer_is_cactus_face},
         {"superface_count", cr.superface_count},
         {"mu_sum", half_json(cr.mu_sum)},
         {"gain_sum", half_json(cr.gain_sum)},
         {"survive_sum", cr.survive_sum}};
  j["verdicts"] = verdicts_json(cr.verdicts, &cr.component);
  if (per_face) {
    Json faces = Json::array();
    for (const SuperFaceRecord& f : cr.superfaces) faces.push_back(superface_json(f));
    j["superfaces"] = std::move(faces);
    Json tris = Json::array();
    for (const TriangleClass& t : cr.triangles) tris.push_back(triangle_json(t));
    j["triangles"] = std::move(tris);
    Json edges = Json::array();
    for (const EdgeClass& e : cr.edges.edges) {
      edges.push_back({{"u", e.u}, {"v", e.v}, {"kind", to_string(e.kind)}, {"supported", e.supported()}});
    }
    j["edges"] = std::move(edges);
  }
  return j;
}

}  // namespace

Json instance_to_json(const PlaneGraph& g) {
  Json j{{"n", g.vertex_count()}, {"rotations", g.rotations()}};
  if (auto d = g.outer_dart()) {
    j["outer"] = {g.dart(*d).origin, g.dart(*d).target};
  } else {
    j["outer"] = nullptr;
  }
  return j;
}

PlaneGraph instance_from_json(const Json& j) {
  if (!j.is_object()) malformed("instance is not a JSON object");
  if (!j.contains("n")) malformed("missing \"n\"");
  const int n = as_int(j["n"], "n");
  if (n < 0) malformed("n is negative");
  if (!j.contains("rotations") || !j["rotations"].is_array()) malformed("missing \"rotations\" array");
  const Json& rj = j["rotations"];
  if (static_cast<int>(rj.size()) != n) {
    malformed("rotations has " + std::to_string(rj.size()) + " entries, expected " + std::to_string(n));
  }
  std::vector<std::vector<Vertex>> rotations(n);
  for (int v = 0; v < n; ++v) {
    if (!rj[v].is_array()) malformed("rotations[" + std::to_string(v) + "] is not an array");
    for (std::size_t i = 0; i < rj[v].size(); ++i) {
      rotations[v].push_back(as_int(rj[v][i], "rotations[" + std::to_string(v) + "][" + std::to_string(i) + "]"));
    }
  }
  std::optional<std::pair<Vertex, Vertex>> outer;
  if (j.contains("outer") && !j["outer"].is_null()) {
    const Json& o = j["outer"];
    if (!o.is_array() || o.size() != 2) malformed("outer must be [u, v]");
    outer = std::make_pair(as_int(o[0], "outer[0]"), as_int(o[1], "outer[1]"));
  }
  return PlaneGraph::from_rotation(n, std::move(rotations), outer);
}

Json cactus_to_json(const TriangularCactus& c) {
  Json out = Json::array();
  for (const auto& t : c.vertex_triples()) out.push_back(triple_json(t));
  return out;
}

TriangularCactus cactus_from_json(const PlaneGraph& g, const Json& j) {
  if (!j.is_array()) malformed("cactus is not a JSON array of triples");
  std::vector<std::array<Vertex, 3>> triples;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "cactus[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 3) malformed(where + " is not a vertex triple");
    std::array<Vertex, 3> t{};
    for (int k = 0; k < 3; ++k) {
      t[k] = as_int(j[i][k], where + "[" + std::to_string(k) + "]");
      if (t[k] < 0 || t[k] >= g.vertex_count()) malformed(where + " names vertex " + std::to_string(t[k]));
    }
    std::sort(t.begin(), t.end());
    triples.push_back(t);
  }
  return TriangularCactus::from_vertex_triples(g, triples);
}

Json trace_to_json(const PlaneGraph& g, const SearchTrace& trace, bool include_timing) {
  Json j{{"initial_delta", trace.initial_delta},
         {"final_delta", trace.final_delta},
         {"moves_examined", trace.moves_examined}};
  Json moves = Json::array();
  for (const SwapMove& m : trace.moves) moves.push_back(move_json(g, m));
  j["moves"] = std::move(moves);
  if (include_timing) j["wall_time_ms"] = trace.wall_time_ms;
  return j;
}

Json oracle_to_json(const OracleResult& r) {
  Json witness = Json::array();
  for (const auto& t : r.witness) witness.push_back(triple_json(t));
  return {{"optimum", r.optimum},
          {"exhausted", r.exhausted},
          {"nodes_explored", r.nodes_explored},
          {"witness", std::move(witness)}};
}

Json generator_spec_to_json(const GeneratorSpec& spec) {
  Json j{{"family", spec.family}};
  if (spec.family == "platonic") {
    j["name"] = spec.name;
    return j;
  }
  j["n"] = spec.n;
  if (spec.family == "grid_triangulation") j["height"] = spec.height;
  if (spec.family == "random_maximal_planar" || spec.family == "apollonian") {
    j["seed"] = spec.seed;
    j["flips"] = spec.flips;
  }
  return j;
}

GeneratorSpec generator_spec_from_json(const Json& j) {
  if (!j.is_object()) malformed("generator spec is not a JSON object");
  if (!j.contains("family") || !j["family"].is_string()) malformed("generator spec needs a \"family\" string");
  GeneratorSpec spec;
  spec.family = j["family"].get<std::string>();
  if (j.contains("n")) spec.n = as_int(j["n"], "n");
  if (j.contains("height")) spec.height = as_int(j["height"], "height");
  if (j.contains("flips")) spec.flips = as_int(j["flips"], "flips");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) malformed("seed is not an integer");
    spec.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) malformed("name is not a string");
    spec.name = j["name"].get<std::string>();
  }
  return spec;
}

Json verdict_to_json(const Verdict& v) {
  return {{"name", v.name},
          {"kind", to_string(v.kind)},
          {"status", to_string(v.status)},
          {"relation", v.relation},
          {"lhs", half_json(v.lhs)},
          {"rhs", half_json(v.rhs)},
          {"detail", v.detail}};
}

Json report_to_json(const PlaneGraph& g, const AnalysisReport& report, bool per_face) {
  Json j{{"verified_optimal", report.verified_optimal},
         {"f3_all", report.f3_all},
         {"q_sum", report.q_sum},
         {"singleton_count", report.singleton_count}};
  j["optimality_witness"] = nullptr;
  if (report.optimality_witness) {
    j["optimality_witness"] = move_json(g, *report.optimality_witness);
  }
  j["verdicts"] = verdicts_json(report.verdicts, nullptr);
  Json comps = Json::array();
  for (const ComponentReport& cr : report.components) comps.push_back(component_json(cr, per_face));
  j["components"] = std::move(comps);
  j["any_failed"] = {{"identity", report.any_failed(VerdictKind::identity)},
                     {"bound", report.any_failed(VerdictKind::bound)},
                     {"conditional", report.any_failed(VerdictKind::conditional)},
                     {"structural", report.any_failed(VerdictKind::structural)}};
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_failure, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_failure, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::io_failure, "write failed for " + path.string());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace cactus_forge
