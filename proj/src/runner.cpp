#include "runner.hpp"

#include <chrono>
#include <functional>

namespace satrop {

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig c;
  if (!j.contains("command")) throw Error("config: missing command");
  c.command = j.at("command").get<std::string>();
  std::string fam = j.value("type", "A");
  if (fam.size() != 1) throw Error("config: type must be a single family letter");
  c.family = family_from_letter(fam[0]);
  c.rank = j.value("rank", 1);
  c.form = form_from_name(j.value("form", "sc"));
  c.n = j.value("n", 3);
  if (j.contains("tuples")) {
    for (const auto& t : j.at("tuples")) {
      std::vector<IVec> tuple;
      for (const auto& lam : t) tuple.push_back(lam.get<IVec>());
      c.tuples.push_back(tuple);
    }
  }
  c.grid_max = j.value("grid_max", -1);
  c.sigma = j.value("sigma", false);
  c.bound_init = j.value("bound_init", -1);
  c.bound_max = j.value("bound_max", 3);
  c.jobs = j.value("jobs", 1);
  c.factor = j.value("factor", 2);
  c.n_max = j.value("n_max", 4);
  c.timing = j.value("timing", true);
  c.emit_points = j.value("emit_points", false);
  c.degree_cap = j.value("degree_cap", -1LL);
  if (c.n < 2) throw Error("config: n must be at least 2");
  if (c.jobs < 1) throw Error("config: jobs must be positive");
  return c;
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["type"] = std::string(1, family_letter(family));
  j["rank"] = rank;
  j["form"] = form_name(form);
  j["n"] = n;
  if (!tuples.empty()) j["tuples"] = tuples;
  if (grid_max >= 0) j["grid_max"] = grid_max;
  j["sigma"] = sigma;
  if (bound_init > 0) j["bound_init"] = bound_init;
  j["bound_max"] = bound_max;
  j["jobs"] = jobs;
  if (command == "saturate") {
    j["factor"] = factor;
    j["n_max"] = n_max;
  }
  if (emit_points) j["emit_points"] = true;
  if (degree_cap > 0) j["degree_cap"] = degree_cap;
  return j;
}

RootDatum datum_from_config(const RunConfig& cfg) {
  if (cfg.form == Form::gl) return build_gl_datum(cfg.rank);
  return build_root_datum(CartanType{cfg.family, cfg.rank}, cfg.form);
}

namespace {

void product_tuples(const std::vector<IVec>& items,
                    const std::function<long long(const IVec&)>& weight, int n,
                    long long budget, std::vector<std::vector<IVec>>& out) {
  std::vector<IVec> cur;
  std::function<void(int, long long)> rec = [&](int pos, long long used) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (const auto& item : items) {
      long long w = weight(item);
      if (used + w > budget) continue;
      cur.push_back(item);
      rec(pos + 1, used + w);
      cur.pop_back();
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
}

std::vector<IVec> gl_dominants_up_to(int m, long long max_boxes) {
  std::vector<IVec> out;
  IVec cur(m, 0);
  std::function<void(int, long long, long long)> rec = [&](int pos, long long used,
                                                           long long upper) {
    if (pos == m) {
      out.push_back(cur);
      return;
    }
    for (long long v = -max_boxes; v <= upper; ++v) {
      long long cost = std::llabs(v);
      if (used + cost > max_boxes) continue;
      cur[pos] = v;
      rec(pos + 1, used + cost, v);
    }
  };
  rec(0, 0, max_boxes);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<IVec>> grid_tuples_semisimple(const RootDatum& d, int n,
                                                      long long max_total_height) {
  auto doms = dominant_coweights_up_to(d, max_total_height);
  std::vector<std::vector<IVec>> out;
  product_tuples(
      doms, [&](const IVec& v) { return height_int(d, {v}); }, n, max_total_height, out);
  return out;
}

std::vector<std::vector<IVec>> grid_tuples_gl(const RootDatum& d, int n,
                                              long long max_total_boxes) {
  auto doms = gl_dominants_up_to(d.lattice_rank, max_total_boxes);
  std::vector<std::vector<IVec>> all;
  product_tuples(
      doms,
      [&](const IVec& v) {
        long long s = 0;
        for (long long x : v) s += std::llabs(x);
        return s;
      },
      n, max_total_boxes, all);
  // keep only tuples whose total weight lies in the root lattice
  std::vector<std::vector<IVec>> out;
  for (auto& t : all) {
    IVec sum(d.lattice_rank, 0);
    for (const auto& lam : t) sum = add(sum, lam);
    long long total = 0;
    for (long long x : sum) total += x;
    if (total == 0) out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::vector<IVec>> grid_tuples_sigma_invariant(const RootDatum& d,
                                                           const DiagramAutomorphism& s, int n,
                                                           long long max_total_height) {
  auto doms = dominant_coweights_up_to(d, max_total_height);
  std::vector<IVec> inv;
  for (const auto& v : doms)
    if (s.apply_cochar(v) == v) inv.push_back(v);
  std::vector<std::vector<IVec>> out;
  product_tuples(
      inv, [&](const IVec& v) { return height_int(d, {v}); }, n, max_total_height, out);
  return out;
}

namespace {

BoundPolicy policy_of(const RunConfig& cfg) {
  BoundPolicy p;
  p.init_hi = cfg.bound_init;
  p.max_growths = cfg.bound_max;
  p.jobs = cfg.jobs;
  return p;
}

std::vector<std::vector<IVec>> tuples_for_enumerate(const RunConfig& cfg, const RootDatum& d) {
  if (!cfg.tuples.empty()) return cfg.tuples;
  long long bound = cfg.grid_max >= 0 ? cfg.grid_max : 4;
  if (d.form == Form::gl) return grid_tuples_gl(d, cfg.n, bound);
  return grid_tuples_semisimple(d, cfg.n, bound);
}

nlohmann::ordered_json lambda_json(const std::vector<IVec>& tuple) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& lam : tuple) j.push_back(lam);
  return j;
}

RunResult cmd_enumerate(const RunConfig& cfg) {
  RootDatum d = datum_from_config(cfg);
  ConfContext ctx = ConfContext::ambient(d, cfg.n);
  RootDatum dual_side = dual(d);
  RepOracle oracle(dual_side);
  auto tuples = tuples_for_enumerate(cfg, d);
  RunResult r;
  r.report["chart"] = {{"matrix_size", ctx.chart().msize()},
                       {"u_chart_word", ctx.chart().chart_word()}};
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  long long mismatches = 0;
  for (const auto& tuple : tuples) {
    TropPointSet set = enumerate_C(ctx, tuple, policy_of(cfg));
    long long expect = ctx.lattice_prefilter(tuple) ? oracle.invariant_dim(tuple) : 0;
    bool ok = set.count() == expect;
    if (!ok) ++mismatches;
    nlohmann::ordered_json row;
    row["lambda"] = lambda_json(tuple);
    row["count"] = set.count();
    row["oracle"] = expect;
    row["match"] = ok;
    row["box"] = {{"lo", set.box.lo}, {"hi", set.box.hi}, {"growths", set.box.growths}};
    if (cfg.emit_points) row["set"] = trop_set_to_json(set);
    rows.push_back(row);
  }
  r.report["results"] = rows;
  r.report["summary"] = {{"tuples", tuples.size()}, {"mismatches", mismatches},
                         {"ok", mismatches == 0}};
  r.exit_code = mismatches == 0 ? 0 : 2;
  return r;
}

struct TwiningRow {
  long long ambient = 0, oracle = 0, fixed = 0, folded = 0, rhs = 0;
  bool roundtrip_ok = true, monotone_ok = true, ok = false;
};

RunResult cmd_twining(const RunConfig& cfg) {
  if (cfg.family != Family::A || cfg.form != Form::simply_connected || cfg.rank < 2)
    throw Error("twining runs on simply connected type A charts of rank >= 2");
  RootDatum d = datum_from_config(cfg);
  DiagramAutomorphism s = flip_automorphism(d);
  ConfContext amb = ConfContext::ambient_with_sigma(d, s, cfg.n);
  ConfContext fol = ConfContext::folded(d, s, cfg.n);
  RootDatum dual_side = dual(d);
  DiagramAutomorphism s_dual = make_automorphism(dual_side, s.perm);
  RepOracle dual_oracle(dual_side);

  std::vector<std::vector<IVec>> tuples = cfg.tuples;
  if (tuples.empty()) {
    long long bound = cfg.grid_max >= 0 ? cfg.grid_max : 4;
    tuples = grid_tuples_sigma_invariant(d, s, cfg.n, bound);
  }
  RunResult r;
  r.report["chart"] = {{"matrix_size", amb.chart().msize()},
                       {"u_chart_word", amb.chart().chart_word()},
                       {"folded_u_chart_word", fol.chart().chart_word()}};
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  long long mismatches = 0;
  for (const auto& tuple : tuples) {
    for (const auto& lam : tuple)
      if (s.apply_cochar(lam) != lam)
        throw Error("twining: lambda tuple is not sigma-invariant");
    TwiningRow t;
    TropPointSet cset = enumerate_C(amb, tuple, policy_of(cfg));
    t.ambient = cset.count();
    t.oracle = amb.lattice_prefilter(tuple) ? dual_oracle.invariant_dim(tuple) : 0;
    TropPointSet fix = fixed_points(amb, cset);
    t.fixed = fix.count();
    std::vector<IVec> folded_tuple;
    for (const auto& lam : tuple) {
      TropConfPoint probe{{lam}, {}};
      folded_tuple.push_back(iota_collapse(amb, probe).h[0]);
    }
    TropPointSet fset = enumerate_C(fol, folded_tuple, policy_of(cfg));
    t.folded = fset.count();
    t.rhs = twining_rhs(dual_side, s_dual, tuple);
    // iota is a verified bijection on the computed sets
    for (const auto& p : fset.points) {
      TropConfPoint up = iota_expand(amb, p);
      if (!membership(amb, up, tuple) || sigma_trop_conf(amb, up) != up ||
          iota_collapse(amb, up) != p)
        t.roundtrip_ok = false;
    }
    for (const auto& p : fix.points) {
      TropConfPoint down = iota_collapse(amb, p);
      if (!membership(fol, down, folded_tuple) || iota_expand(amb, down) != p)
        t.roundtrip_ok = false;
    }
    t.monotone_ok = t.ambient >= t.folded && (t.ambient != 1 || t.folded == 1);
    t.ok = t.ambient == t.oracle && t.fixed == t.folded && t.fixed == t.rhs &&
           t.roundtrip_ok && t.monotone_ok;
    if (!t.ok) ++mismatches;
    nlohmann::ordered_json row;
    row["lambda"] = lambda_json(tuple);
    row["ambient_count"] = t.ambient;
    row["ambient_oracle"] = t.oracle;
    row["fixed_count"] = t.fixed;
    row["folded_count"] = t.folded;
    row["twining_rhs"] = t.rhs;
    row["iota_roundtrip"] = t.roundtrip_ok;
    row["monotonicity"] = t.monotone_ok;
    row["match"] = t.ok;
    rows.push_back(row);
  }
  r.report["results"] = rows;
  r.report["summary"] = {{"tuples", tuples.size()}, {"mismatches", mismatches},
                         {"ok", mismatches == 0}};
  r.exit_code = mismatches == 0 ? 0 : 2;
  return r;
}

// Dominant characters with Dynkin labels bounded by label_max (semisimple
// forms: the X basis of the simply connected form is the fundamental weights).
std::vector<std::vector<IVec>> grid_char_tuples(const RootDatum& d, int n, long long label_max) {
  std::vector<IVec> doms;
  IVec cur(d.lattice_rank, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == d.lattice_rank) {
      if (is_dominant_char(d, cur)) doms.push_back(cur);
      return;
    }
    for (long long v = 0; v <= label_max; ++v) {
      cur[pos] = v;
      rec(pos + 1);
    }
    cur[pos] = 0;
  };
  rec(0);
  std::vector<std::vector<IVec>> out;
  product_tuples(
      doms, [](const IVec&) { return 0LL; }, n, 0, out);
  std::vector<std::vector<IVec>> filtered;
  for (auto& t : out) {
    IVec sum(d.lattice_rank, 0);
    for (const auto& lam : t) sum = add(sum, lam);
    if (in_root_lattice(d, sum)) filtered.push_back(std::move(t));
  }
  return filtered;
}

RunResult cmd_saturate(const RunConfig& cfg) {
  RunResult r;
  long long mismatches = 0;
  if (cfg.sigma) {
    if (cfg.family != Family::A || cfg.form != Form::simply_connected || cfg.rank < 2)
      throw Error("sigma saturation mechanism runs on simply connected type A charts");
    RootDatum d = datum_from_config(cfg);
    DiagramAutomorphism s = flip_automorphism(d);
    ConfContext amb = ConfContext::ambient_with_sigma(d, s, cfg.n);
    ConfContext fol = ConfContext::folded(d, s, cfg.n);
    RootDatum dual_side = dual(d);
    DiagramAutomorphism s_dual = make_automorphism(dual_side, s.perm);
    int csig = c_sigma(s);

    std::vector<std::vector<IVec>> tuples = cfg.tuples;
    if (tuples.empty()) {
      long long bound = cfg.grid_max >= 0 ? cfg.grid_max : 4;
      tuples = grid_tuples_semisimple(d, cfg.n, bound);
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& tuple : tuples) {
      TropPointSet cset = enumerate_C(amb, tuple, policy_of(cfg));
      std::vector<IVec> stuple = s_map_tuple(amb, tuple);
      long long failures = 0;
      for (const auto& p : cset.points) {
        TropConfPoint sp = sum_map_Sigma(amb, p);
        if (!membership(amb, sp, stuple) || sigma_trop_conf(amb, sp) != sp) ++failures;
      }
      bool sigma_inv = true;
      for (const auto& lam : tuple)
        if (s.apply_cochar(lam) != lam) sigma_inv = false;
      nlohmann::ordered_json row;
      row["lambda"] = lambda_json(tuple);
      row["count"] = cset.count();
      row["sigma_map_failures"] = failures;
      if (failures) ++mismatches;
      if (sigma_inv && cset.count() > 0) {
        // Transfer instance: the folded set at c_sigma * lambda is nonempty.
        std::vector<IVec> folded_scaled;
        for (const auto& lam : tuple) {
          TropConfPoint probe{{scale(lam, csig)}, {}};
          folded_scaled.push_back(iota_collapse(amb, probe).h[0]);
        }
        TropPointSet fset = enumerate_C(fol, folded_scaled, policy_of(cfg));
        long long rhs = twining_rhs(dual_side, s_dual, s_map_tuple(amb, tuple));
        bool ok = fset.count() > 0 && fset.count() == rhs;
        row["folded_count_at_c_sigma"] = fset.count();
        row["folded_oracle_at_c_sigma"] = rhs;
        row["transfer_ok"] = ok;
        if (!ok) ++mismatches;
      }
      rows.push_back(row);
    }
    r.report["sigma_mechanism"] = rows;

    // Persistence of one-dimensional invariants under stretching, on the
    // weight side of the same fold.
    nlohmann::ordered_json fulton = nlohmann::ordered_json::array();
    {
      RepOracle oracle(d);
      long long bound = std::min<long long>(cfg.grid_max >= 0 ? cfg.grid_max : 2, 2);
      auto char_tuples = grid_char_tuples(d, cfg.n, bound);
      for (const auto& tuple : char_tuples) {
        bool inv = true;
        for (const auto& lam : tuple)
          if (s.apply_char(lam) != lam) inv = false;
        if (!inv) continue;
        if (oracle.invariant_dim(tuple) != 1) continue;
        bool ok = true;
        for (int N = 1; N <= cfg.n_max; ++N) {
          std::vector<IVec> scaled;
          for (const auto& lam : tuple) scaled.push_back(scale(lam, N));
          if (twining_rhs(d, s, scaled) != 1) ok = false;
        }
        nlohmann::ordered_json row;
        row["lambda"] = lambda_json(tuple);
        row["persists"] = ok;
        if (!ok) ++mismatches;
        fulton.push_back(row);
      }
    }
    r.report["dim1_persistence"] = fulton;
  } else {
    // Oracle-only corroboration scan on the given weight-side datum.
    RootDatum d = datum_from_config(cfg);
    RepOracle oracle(d);
    long long bound = cfg.grid_max >= 0 ? cfg.grid_max : 2;
    std::vector<std::vector<IVec>> tuples =
        cfg.tuples.empty() ? grid_char_tuples(d, cfg.n, bound) : cfg.tuples;
    auto rows = saturation_scan(oracle, tuples, cfg.factor, cfg.n_max);
    nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
    long long counterexamples = 0;
    for (const auto& row : rows) {
      nlohmann::ordered_json j;
      j["lambda"] = lambda_json(row.lambda);
      j["least_nonzero_N"] = row.least_nonzero_N;
      j["dim_at_factor"] = row.dim_at_factor;
      j["ok"] = row.ok;
      if (!row.ok) {
        ++counterexamples;
        ++mismatches;
      }
      jrows.push_back(j);
    }
    r.report["scan"] = jrows;
    r.report["scan_note"] =
        "finite corroboration of the saturation property at the configured bounds; "
        "not a proof";
    r.report["counterexamples"] = counterexamples;
  }
  r.report["summary"] = {{"mismatches", mismatches}, {"ok", mismatches == 0}};
  r.exit_code = mismatches == 0 ? 0 : 2;
  return r;
}

}  // namespace

RunResult run_command(const RunConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  if (cfg.degree_cap > 0) set_ratfun_degree_cap(cfg.degree_cap);
  RunResult r;
  nlohmann::ordered_json body;
  if (cfg.command == "enumerate")
    r = cmd_enumerate(cfg);
  else if (cfg.command == "twining")
    r = cmd_twining(cfg);
  else if (cfg.command == "saturate")
    r = cmd_saturate(cfg);
  else
    throw Error("unknown command '" + cfg.command + "'");
  nlohmann::ordered_json report;
  report["schema"] = "satrop-report/1";
  report["command"] = cfg.command;
  report["config"] = cfg.to_json();
  for (auto& [key, value] : r.report.items()) report[key] = value;
  if (cfg.timing) {
    auto end = std::chrono::steady_clock::now();
    report["timing"] = {
        {"total_ms", std::chrono::duration<double, std::milli>(end - start).count()}};
  }
  r.report = std::move(report);
  return r;
}

}  // namespace satrop
