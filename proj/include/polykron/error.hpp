#ifndef POLYKRON_ERROR_HPP
#define POLYKRON_ERROR_HPP

#include <stdexcept>
#include <string>

namespace polykron {

enum class errc {
  loop_edge,
  duplicate_edge,
  vertex_out_of_range,
  too_few_vertices,
  missing_edge,
  degree_not_two,
  search_budget_exceeded,
  non_planar_input,
  corrupt_rotation,
  inconsistent_witness,
  not_bipartite,
  disconnected,
  not_polyhedral,
  not_cubic,
  not_quad_face,
  spec_violation,
  bad_params,
  malformed_graph6,
  malformed_json,
  unknown_experiment,
};

const char* errc_name(errc c);

// Single exception type for the whole library. `code` identifies the error,
// `position` is set for byte-level format errors, `clause` for build-spec
// violations.
struct Error : std::runtime_error {
  errc code;
  int position = -1;
  std::string clause;

  Error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
  Error(errc c, const std::string& msg, int pos)
      : std::runtime_error(msg), code(c), position(pos) {}
  Error(errc c, const std::string& msg, std::string which_clause)
      : std::runtime_error(msg), code(c), clause(std::move(which_clause)) {}
};

}  // namespace polykron

#endif
