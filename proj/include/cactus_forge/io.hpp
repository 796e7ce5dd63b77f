#pragma once

#include <filesystem>
#include <string>

#include "cactus_forge/analyzer.hpp"
#include "cactus_forge/cactus.hpp"
#include "cactus_forge/generators.hpp"
#include "cactus_forge/local_search.hpp"
#include "cactus_forge/oracle.hpp"
#include "cactus_forge/plane_graph.hpp"
#include "json.hpp"

namespace cactus_forge {

using Json = nlohmann::ordered_json;

// {"n": int, "rotations": [[ccw neighbours] per vertex], "outer": [u, v] or null}.
Json instance_to_json(const PlaneGraph& g);
// Throws MalformedInput on shape errors; embedding errors come from PlaneGraph.
PlaneGraph instance_from_json(const Json& j);

// Ascending list of sorted vertex triples.
Json cactus_to_json(const TriangularCactus& c);
// Re-validated against g: each triple must be a candidate and the set a cactus.
TriangularCactus cactus_from_json(const PlaneGraph& g, const Json& j);

Json trace_to_json(const PlaneGraph& g, const SearchTrace& trace, bool include_timing = true);
Json oracle_to_json(const OracleResult& r);
Json generator_spec_to_json(const GeneratorSpec& spec);
GeneratorSpec generator_spec_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
// Every count and verdict; failed verdicts carry a "counterexample" object.
// per_face adds the super-face, triangle and edge tables.
Json report_to_json(const PlaneGraph& g, const AnalysisReport& report, bool per_face = false);

// Throw IoFailure (unreadable / unwritable) or MalformedInput (bad JSON text).
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace cactus_forge
