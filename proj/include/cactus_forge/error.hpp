#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cactus_forge {

enum class ErrorCode {
  loop_edge,
  parallel_edge,
  asymmetric_adjacency,
  non_planar_embedding,
  bad_outer_designator,
  malformed_input,
  empty_set,
  too_few_vertices,
  disconnected,
  unknown_triangle,
  invalid_cactus,
  triangle_not_in_cactus,
  iteration_cap_exceeded,
  too_many_candidates,
  not_a_component,
  not_locally_optimal_input,
  identity_violation,
  too_small,
  unknown_name,
  io_failure,
  invalid_config,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cactus_forge
