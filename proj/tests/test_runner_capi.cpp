#include "doctest.h"
#include "runner.hpp"
#include "satrop/satrop.h"

using namespace satrop;

TEST_CASE("enumerate command agrees with its oracle on an SL2 grid") {
  RunConfig cfg;
  cfg.command = "enumerate";
  cfg.family = Family::A;
  cfg.rank = 1;
  cfg.form = Form::simply_connected;
  cfg.n = 3;
  cfg.grid_max = 4;
  cfg.timing = false;
  RunResult r = run_command(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.report.at("summary").at("ok").get<bool>());
  CHECK(r.report.at("schema") == "satrop-report/1");
}

TEST_CASE("identical configs give byte-identical reports") {
  RunConfig cfg;
  cfg.command = "enumerate";
  cfg.family = Family::A;
  cfg.rank = 2;
  cfg.form = Form::simply_connected;
  cfg.n = 3;
  cfg.grid_max = 4;
  cfg.jobs = 2;
  cfg.timing = false;
  std::string a = run_command(cfg).report.dump();
  std::string b = run_command(cfg).report.dump();
  CHECK(a == b);
}

TEST_CASE("twining command on a small A2 grid") {
  RunConfig cfg;
  cfg.command = "twining";
  cfg.family = Family::A;
  cfg.rank = 2;
  cfg.form = Form::simply_connected;
  cfg.n = 3;
  cfg.grid_max = 4;
  cfg.timing = false;
  RunResult r = run_command(cfg);
  CHECK(r.exit_code == 0);
  for (const auto& row : r.report.at("results")) {
    CHECK(row.at("match").get<bool>());
    CHECK(row.at("fixed_count") == row.at("twining_rhs"));
  }
}

TEST_CASE("saturate command, engine mechanism mode") {
  RunConfig cfg;
  cfg.command = "saturate";
  cfg.family = Family::A;
  cfg.rank = 2;
  cfg.form = Form::simply_connected;
  cfg.n = 3;
  cfg.grid_max = 3;
  cfg.sigma = true;
  cfg.timing = false;
  RunResult r = run_command(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.report.contains("sigma_mechanism"));
  CHECK(r.report.contains("dim1_persistence"));
}

TEST_CASE("saturate command, oracle scan mode") {
  RunConfig cfg;
  cfg.command = "saturate";
  cfg.family = Family::B;
  cfg.rank = 2;
  cfg.form = Form::simply_connected;
  cfg.n = 3;
  cfg.grid_max = 1;
  cfg.factor = 2;
  cfg.n_max = 3;
  cfg.timing = false;
  RunResult r = run_command(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.report.at("counterexamples") == 0);
}

TEST_CASE("explicit tuples and mismatch-free exit codes") {
  RunConfig cfg;
  cfg.command = "enumerate";
  cfg.family = Family::A;
  cfg.rank = 2;
  cfg.form = Form::simply_connected;
  cfg.n = 3;
  cfg.tuples = {{{1, 1}, {1, 1}, {1, 1}}};
  cfg.timing = false;
  cfg.emit_points = true;
  RunResult r = run_command(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.report.at("results")[0].at("count") == 2);
  const auto& set = r.report.at("results")[0].at("set");
  CHECK(set.at("points").size() == 2);
  CHECK(set.at("box").at("boundary_clean").get<bool>());
  CHECK(set.at("points")[0].contains("h"));
  CHECK(set.at("points")[0].contains("u"));
}

TEST_CASE("c api round trip") {
  const char* config =
      R"({"command":"enumerate","type":"A","rank":1,"form":"sc","n":3,
          "tuples":[[[1],[1],[2]],[[1],[1],[1]]],"timing":false})";
  satrop_run* r = satrop_run_new(config);
  REQUIRE(r != nullptr);
  CHECK(satrop_run_execute(r) == SATROP_OK);
  const char* report = satrop_run_report(r);
  REQUIRE(report != nullptr);
  auto j = nlohmann::json::parse(report);
  CHECK(j.at("results")[0].at("count") == 1);
  CHECK(j.at("results")[1].at("count") == 1);
  satrop_run_free(r);

  satrop_run* bad = satrop_run_new("{\"command\":\"nope\"}");
  CHECK(satrop_run_execute(bad) == SATROP_E_RUNTIME);
  CHECK(satrop_run_error(bad) != nullptr);
  satrop_run_free(bad);

  satrop_run* unparsable = satrop_run_new("not json");
  CHECK(satrop_run_execute(unparsable) == SATROP_E_CONFIG);
  satrop_run_free(unparsable);
}

TEST_CASE("c api datum serialization") {
  char* out = nullptr;
  REQUIRE(satrop_datum_json("A", 2, "sc", &out) == SATROP_OK);
  auto j = nlohmann::json::parse(out);
  CHECK(j.at("cartan") == nlohmann::json({{2, -1}, {-1, 2}}));
  satrop_free_string(out);
  REQUIRE(satrop_folded_datum_json("D", 4, 3, &out) == SATROP_OK);
  auto f = nlohmann::json::parse(out);
  CHECK(f.at("folded").at("family") == "G");
  satrop_free_string(out);
  CHECK(satrop_datum_json("Z", 2, "sc", &out) == SATROP_E_CONFIG);
}
