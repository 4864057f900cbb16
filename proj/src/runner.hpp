#pragma once

#include "confspace.hpp"
#include "oracle.hpp"

namespace satrop {

// Batch configuration shared by the CLI and the C API. The chart group is
// named by (family, rank, form); counts of tropical points index invariant
// dimensions of the Langlands dual group.
struct RunConfig {
  std::string command;  // "enumerate" | "twining" | "saturate"
  Family family = Family::A;
  int rank = 1;
  Form form = Form::simply_connected;
  int n = 3;
  std::vector<std::vector<IVec>> tuples;  // explicit lambda tuples, chart coordinates
  long long grid_max = -1;
  bool sigma = false;
  long long bound_init = -1;
  int bound_max = 3;
  int jobs = 1;
  int factor = 2;  // saturation factor to corroborate
  int n_max = 4;   // stretch bound in saturation scans
  bool timing = true;
  bool emit_points = false;      // include full point sets in enumerate reports
  long long degree_cap = -1;     // override the rational-function degree cap

  static RunConfig from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
};

struct RunResult {
  int exit_code = 0;  // 0: all equalities hold, 2: mismatch found
  nlohmann::ordered_json report;
};

RunResult run_command(const RunConfig& cfg);

// Grid generators (deterministic order).
std::vector<std::vector<IVec>> grid_tuples_semisimple(const RootDatum& d, int n,
                                                      long long max_total_height);
std::vector<std::vector<IVec>> grid_tuples_gl(const RootDatum& d, int n,
                                              long long max_total_boxes);
std::vector<std::vector<IVec>> grid_tuples_sigma_invariant(const RootDatum& d,
                                                           const DiagramAutomorphism& s, int n,
                                                           long long max_total_height);

RootDatum datum_from_config(const RunConfig& cfg);

}  // namespace satrop
