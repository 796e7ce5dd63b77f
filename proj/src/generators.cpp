#include "cactus_forge/generators.hpp"

#include <array>
#include <map>
#include <set>
#include <vector>

#include "cactus_forge/error.hpp"
#include "cactus_forge/rng.hpp"

namespace cactus_forge {

namespace {

using Cycle = std::vector<Vertex>;

PlaneGraph with_outer_cycle(int n, std::vector<Cycle> faces, const Cycle& outer) {
  faces.push_back(outer);
  return PlaneGraph::from_faces(n, faces, {outer[0], outer[1]});
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::too_small, what);
}

}  // namespace

PlaneGraph random_maximal_planar(int n, std::uint64_t seed, int flips) {
  require(n >= 3, "random_maximal_planar needs n >= 3, got " + std::to_string(n));
  if (flips < 0) throw Error(ErrorCode::invalid_config, "negative flip count");
  Rng rng(seed);
  std::vector<std::array<Vertex, 3>> bounded{{0, 1, 2}};
  for (Vertex x = 3; x < n; ++x) {
    const std::size_t i = rng.below(bounded.size());
    const auto [a, b, c] = bounded[i];
    bounded[i] = {a, b, x};
    bounded.push_back({b, c, x});
    bounded.push_back({c, a, x});
  }

  if (flips > 0 && n >= 4) {
    // Directed edge -> index of the bounded face using it.
    std::map<std::pair<Vertex, Vertex>, std::size_t> face_of;
    std::set<std::pair<Vertex, Vertex>> edges;
    auto index_face = [&](std::size_t f) {
      const auto& t = bounded[f];
      for (int j = 0; j < 3; ++j) face_of[{t[j], t[(j + 1) % 3]}] = f;
    };
    for (std::size_t f = 0; f < bounded.size(); ++f) {
      index_face(f);
      for (int j = 0; j < 3; ++j) {
        Vertex u = bounded[f][j], v = bounded[f][(j + 1) % 3];
        edges.insert({std::min(u, v), std::max(u, v)});
      }
    }
    int done = 0;
    const long long attempt_cap = 50LL * flips + 100;
    for (long long attempt = 0; attempt < attempt_cap && done < flips; ++attempt) {
      const std::size_t f1 = rng.below(bounded.size());
      const int j = static_cast<int>(rng.below(3));
      const Vertex u = bounded[f1][j], v = bounded[f1][(j + 1) % 3], a = bounded[f1][(j + 2) % 3];
      auto other = face_of.find({v, u});
      if (other == face_of.end()) continue;  // u-v lies on the outer face
      const std::size_t f2 = other->second;
      Vertex b = -1;
      for (int k = 0; k < 3; ++k) {
        if (bounded[f2][k] == v && bounded[f2][(k + 1) % 3] == u) b = bounded[f2][(k + 2) % 3];
      }
      if (a == b || edges.count({std::min(a, b), std::max(a, b)})) continue;
      face_of.erase({u, v});
      face_of.erase({v, u});
      edges.erase({std::min(u, v), std::max(u, v)});
      edges.insert({std::min(a, b), std::max(a, b)});
      bounded[f1] = {u, b, a};
      bounded[f2] = {b, v, a};
      index_face(f1);
      index_face(f2);
      ++done;
    }
  }

  std::vector<Cycle> faces;
  for (const auto& t : bounded) faces.push_back({t[0], t[1], t[2]});
  return with_outer_cycle(n, std::move(faces), {0, 2, 1});
}

PlaneGraph wheel(int k) {
  require(k >= 4, "wheel needs k >= 4, got " + std::to_string(k));
  const int rim = k - 1;
  std::vector<Cycle> faces;
  for (int i = 1; i <= rim; ++i) faces.push_back({0, i, i % rim + 1});
  Cycle outer;
  for (int i = rim; i >= 1; --i) outer.push_back(i);
  return with_outer_cycle(k, std::move(faces), outer);
}

PlaneGraph fan(int k) {
  require(k >= 3, "fan needs k >= 3, got " + std::to_string(k));
  const int last = k - 1;
  std::vector<Cycle> faces;
  for (int i = 1; i < last; ++i) faces.push_back({0, i, i + 1});
  Cycle outer{0};
  for (int i = last; i >= 1; --i) outer.push_back(i);
  return with_outer_cycle(k, std::move(faces), outer);
}

PlaneGraph platonic(const std::string& name) {
  if (name == "tetrahedron") {
    return with_outer_cycle(4, {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}}, {0, 2, 1});
  }
  if (name == "octahedron") {
    // Outer triangle 0,1,2; inner triangle 5,3,4 with i and i+3 opposite.
    return with_outer_cycle(
        6, {{0, 1, 5}, {1, 3, 5}, {1, 2, 3}, {2, 4, 3}, {2, 0, 4}, {0, 5, 4}, {5, 3, 4}},
        {0, 2, 1});
  }
  if (name == "icosahedron") {
    // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
    std::vector<Cycle> faces;
    auto upper = [](int i) { return 1 + (i % 5); };
    auto lower = [](int i) { return 6 + (i % 5); };
    for (int i = 1; i < 5; ++i) faces.push_back({0, upper(i), upper(i + 1)});
    for (int i = 0; i < 5; ++i) {
      faces.push_back({upper(i + 1), upper(i), lower(i)});
      faces.push_back({upper(i + 1), lower(i), lower(i + 1)});
      faces.push_back({11, lower(i + 1), lower(i)});
    }
    return with_outer_cycle(12, std::move(faces), {0, upper(0), upper(1)});
  }
  throw Error(ErrorCode::unknown_name, "platonic solid '" + name + "'");
}

PlaneGraph grid_triangulation(int width, int height) {
  require(width >= 2 && height >= 2, "grid needs width, height >= 2");
  auto id = [width](int i, int j) { return j * width + i; };
  std::vector<Cycle> faces;
  for (int j = 0; j + 1 < height; ++j) {
    for (int i = 0; i + 1 < width; ++i) {
      const Vertex a = id(i, j), b = id(i + 1, j), c = id(i + 1, j + 1), d = id(i, j + 1);
      faces.push_back({a, b, c});
      faces.push_back({a, c, d});
    }
  }
  Cycle outer;
  for (int j = 0; j + 1 < height; ++j) outer.push_back(id(0, j));
  for (int i = 0; i + 1 < width; ++i) outer.push_back(id(i, height - 1));
  for (int j = height - 1; j > 0; --j) outer.push_back(id(width - 1, j));
  for (int i = width - 1; i > 0; --i) outer.push_back(id(i, 0));
  return with_outer_cycle(width * height, std::move(faces), outer);
}

PlaneGraph generate(const GeneratorSpec& spec) {
  if (spec.family == "random_maximal_planar") return random_maximal_planar(spec.n, spec.seed, spec.flips);
  if (spec.family == "apollonian") return random_maximal_planar(spec.n, spec.seed, 0);
  if (spec.family == "wheel") return wheel(spec.n);
  if (spec.family == "fan") return fan(spec.n);
  if (spec.family == "platonic") return platonic(spec.name);
  if (spec.family == "grid_triangulation") return grid_triangulation(spec.n, spec.height);
  throw Error(ErrorCode::unknown_name, "generator family '" + spec.family + "'");
}

}  // namespace cactus_forge
