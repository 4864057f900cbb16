#include "satrop/satrop.h"

#include <cstring>
#include <new>
#include <string>

#include "runner.hpp"

using namespace satrop;

struct satrop_run {
  std::string config;
  std::string report;
  std::string error;
  bool has_report = false;
};

extern "C" {

unsigned satrop_abi_version(void) { return 1; }

satrop_run* satrop_run_new(const char* config_json) {
  satrop_run* r = new (std::nothrow) satrop_run;
  if (r && config_json) r->config = config_json;
  return r;
}

void satrop_run_free(satrop_run* run) { delete run; }

int satrop_run_execute(satrop_run* run) {
  if (!run) return SATROP_E_CONFIG;
  run->report.clear();
  run->error.clear();
  run->has_report = false;
  RunConfig cfg;
  try {
    cfg = RunConfig::from_json(nlohmann::json::parse(run->config));
  } catch (const std::exception& e) {
    run->error = e.what();
    return SATROP_E_CONFIG;
  }
  try {
    RunResult res = run_command(cfg);
    run->report = res.report.dump(2);
    run->has_report = true;
    return res.exit_code == 0 ? SATROP_OK : SATROP_MISMATCH;
  } catch (const std::exception& e) {
    run->error = e.what();
    return SATROP_E_RUNTIME;
  }
}

const char* satrop_run_report(const satrop_run* run) {
  if (!run || !run->has_report) return nullptr;
  return run->report.c_str();
}

const char* satrop_run_error(const satrop_run* run) {
  if (!run || run->error.empty()) return nullptr;
  return run->error.c_str();
}

static char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int satrop_datum_json(const char* family, int rank, const char* form, char** out) {
  if (!family || !form || !out) return SATROP_E_CONFIG;
  try {
    RootDatum d;
    Form f = form_from_name(form);
    if (f == Form::gl)
      d = build_gl_datum(rank);
    else
      d = build_root_datum(CartanType{family_from_letter(family[0]), rank}, f);
    *out = dup_string(datum_to_json(d).dump(2));
    return *out ? SATROP_OK : SATROP_E_RUNTIME;
  } catch (const std::exception&) {
    return SATROP_E_CONFIG;
  }
}

int satrop_folded_datum_json(const char* family, int rank, int order, char** out) {
  if (!family || !out) return SATROP_E_CONFIG;
  try {
    RootDatum d = build_root_datum(CartanType{family_from_letter(family[0]), rank},
                                   Form::simply_connected);
    DiagramAutomorphism s =
        order == 3 ? triality_automorphism(d) : flip_automorphism(d);
    FoldedDatum f = fold(d, s);
    *out = dup_string(folded_to_json(f).dump(2));
    return *out ? SATROP_OK : SATROP_E_RUNTIME;
  } catch (const std::exception&) {
    return SATROP_E_CONFIG;
  }
}

void satrop_free_string(char* s) { std::free(s); }

}  // extern "C"
