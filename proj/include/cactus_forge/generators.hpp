#pragma once

#include <cstdint>
#include <string>

#include "cactus_forge/plane_graph.hpp"

namespace cactus_forge {

// Stacked triangulation: start from triangle (0,1,2) and insert each new
// vertex into a uniformly chosen bounded face, then perform `flips`
// successful random diagonal flips among bounded faces. The outer face is
// the initial triangle's outer side.
PlaneGraph random_maximal_planar(int n, std::uint64_t seed, int flips = 0);

// Hub 0 plus the cycle 1..k-1.
PlaneGraph wheel(int k);
// Apex 0 plus the path 1..k-1.
PlaneGraph fan(int k);
// "tetrahedron", "octahedron" or "icosahedron".
PlaneGraph platonic(const std::string& name);
// width x height grid points, every cell split along its rising diagonal.
PlaneGraph grid_triangulation(int width, int height);

struct GeneratorSpec {
  std::string family;  // random_maximal_planar, apollonian, wheel, fan, platonic, grid_triangulation
  int n = 0;           // vertex count; grid width for grid_triangulation
  int height = 0;      // grid only
  std::uint64_t seed = 0;
  int flips = 0;
  std::string name;    // platonic only
};

PlaneGraph generate(const GeneratorSpec& spec);

}  // namespace cactus_forge
