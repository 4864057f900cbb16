// Command-line front end. Builds a configuration JSON from flags and drives
// the shared library through its C interface.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "satrop/satrop.h"

namespace {

struct CommonOpts {
  std::string type = "A";
  int rank = 1;
  std::string form = "sc";
  int n = 3;
  std::vector<std::string> lambdas;
  long long grid_max = -1;
  bool sigma = false;
  long long bound_init = -1;
  int bound_max = 3;
  int jobs = 1;
  int factor = 2;
  int n_max = 4;
  bool no_timing = false;
  bool points = false;
  long long degree_cap = -1;
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--type", o.type, "Cartan family letter of the chart group");
  cmd->add_option("--rank", o.rank, "rank (for --form gl: the matrix size m)")->required();
  cmd->add_option("--form", o.form, "lattice form: sc | adjoint | gl");
  cmd->add_option("--n", o.n, "number of tensor factors");
  cmd->add_option("--lambda", o.lambdas,
                  "coweight coordinates 'c1,c2,...'; give n of them per tuple, repeatable");
  cmd->add_option("--grid-max", o.grid_max, "grid bound when no --lambda is given");
  cmd->add_flag("--sigma", o.sigma, "attach the standard diagram flip");
  cmd->add_option("--bound-init", o.bound_init, "initial scan box upper bound");
  cmd->add_option("--bound-max", o.bound_max, "maximal number of box growths");
  cmd->add_option("--jobs", o.jobs, "worker threads for box scans");
  cmd->add_option("--factor", o.factor, "saturation factor to corroborate");
  cmd->add_option("--nmax", o.n_max, "largest stretch N in saturation scans");
  cmd->add_flag("--no-timing", o.no_timing, "omit the timing section from the report");
  cmd->add_flag("--points", o.points, "include full tropical point sets in the report");
  cmd->add_option("--degree-cap", o.degree_cap, "abort threshold for polynomial degrees");
  cmd->add_option("--out", o.out, "write the JSON report to this file");
}

std::vector<long long> parse_coords(const std::string& s) {
  std::vector<long long> v;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) v.push_back(std::stoll(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return v;
}

nlohmann::json build_config(const std::string& command, const CommonOpts& o) {
  nlohmann::json j;
  j["command"] = command;
  j["type"] = o.type;
  j["rank"] = o.rank;
  j["form"] = o.form;
  j["n"] = o.n;
  if (!o.lambdas.empty()) {
    if (o.lambdas.size() % o.n != 0)
      throw CLI::ValidationError("--lambda", "expected a multiple of n coweights");
    nlohmann::json tuples = nlohmann::json::array();
    for (size_t i = 0; i < o.lambdas.size(); i += o.n) {
      nlohmann::json tuple = nlohmann::json::array();
      for (int k = 0; k < o.n; ++k) tuple.push_back(parse_coords(o.lambdas[i + k]));
      tuples.push_back(tuple);
    }
    j["tuples"] = tuples;
  }
  if (o.grid_max >= 0) j["grid_max"] = o.grid_max;
  j["sigma"] = o.sigma;
  if (o.bound_init > 0) j["bound_init"] = o.bound_init;
  j["bound_max"] = o.bound_max;
  j["jobs"] = o.jobs;
  j["factor"] = o.factor;
  j["n_max"] = o.n_max;
  j["timing"] = !o.no_timing;
  j["emit_points"] = o.points;
  if (o.degree_cap > 0) j["degree_cap"] = o.degree_cap;
  return j;
}

int run(const std::string& command, const CommonOpts& o) {
  nlohmann::json cfg = build_config(command, o);
  satrop_run* r = satrop_run_new(cfg.dump().c_str());
  if (!r) {
    std::cerr << "satrop: allocation failure\n";
    return 1;
  }
  int code = satrop_run_execute(r);
  int exit_code = 1;
  if (code == SATROP_OK || code == SATROP_MISMATCH) {
    const char* report = satrop_run_report(r);
    if (o.out.empty()) {
      std::cout << report << "\n";
    } else {
      std::ofstream f(o.out);
      f << report << "\n";
    }
    exit_code = code == SATROP_OK ? 0 : 2;
    if (code == SATROP_MISMATCH) std::cerr << "satrop: mismatch found; see the report\n";
  } else {
    const char* err = satrop_run_error(r);
    std::cerr << "satrop: " << (err ? err : "unknown error") << "\n";
  }
  satrop_run_free(r);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropical points of configuration spaces: enumeration, twining and "
               "saturation experiments"};
  app.require_subcommand(1);

  CommonOpts enum_opts, twin_opts, sat_opts;
  CLI::App* cmd_enum = app.add_subcommand(
      "enumerate", "count tropical points against the tensor-invariant oracle");
  add_common(cmd_enum, enum_opts);
  CLI::App* cmd_twin = app.add_subcommand(
      "twining", "compare fixed-point counts with the folded-group dimensions");
  add_common(cmd_twin, twin_opts);
  CLI::App* cmd_sat = app.add_subcommand(
      "saturate", "summation-map mechanism checks and saturation scans");
  add_common(cmd_sat, sat_opts);

  CLI::App* cmd_datum = app.add_subcommand("datum", "print a root datum as JSON");
  std::string d_type = "A", d_form = "sc";
  int d_rank = 1, d_order = 0;
  cmd_datum->add_option("--type", d_type, "Cartan family letter");
  cmd_datum->add_option("--rank", d_rank, "rank")->required();
  cmd_datum->add_option("--form", d_form, "sc | adjoint | gl");
  cmd_datum->add_option("--fold", d_order,
                        "print the folded datum for an automorphism of this order");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_enum->parsed()) return run("enumerate", enum_opts);
    if (cmd_twin->parsed()) return run("twining", twin_opts);
    if (cmd_sat->parsed()) return run("saturate", sat_opts);
    if (cmd_datum->parsed()) {
      char* out = nullptr;
      int code = d_order > 0 ? satrop_folded_datum_json(d_type.c_str(), d_rank, d_order, &out)
                             : satrop_datum_json(d_type.c_str(), d_rank, d_form.c_str(), &out);
      if (code != SATROP_OK) {
        std::cerr << "satrop: invalid datum request\n";
        return 1;
      }
      std::cout << out << "\n";
      satrop_free_string(out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "satrop: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
