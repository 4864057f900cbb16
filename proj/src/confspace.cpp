#include "confspace.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace satrop {

ConfContext ConfContext::ambient(const RootDatum& d, int n) {
  ConfContext c;
  c.datum_ = d;
  c.n_ = n;
  c.chart_ = std::make_shared<ChartGroup>(ChartGroup::ambient(d));
  c.eval_ = std::make_shared<TropEvaluator>(*c.chart_, n);
  return c;
}

ConfContext ConfContext::ambient_with_sigma(const RootDatum& d, const DiagramAutomorphism& s,
                                            int n) {
  ConfContext c;
  c.datum_ = d;
  c.sigma_ = s;
  c.n_ = n;
  c.chart_ = std::make_shared<ChartGroup>(ChartGroup::ambient(d, s));
  c.eval_ = std::make_shared<TropEvaluator>(*c.chart_, n);
  c.pl_ = std::make_shared<PLContext>(make_pl_context(d, s));
  return c;
}

ConfContext ConfContext::folded(const RootDatum& ambient_sc, const DiagramAutomorphism& s,
                                int n) {
  ConfContext c;
  c.datum_ = ambient_sc;
  c.sigma_ = s;
  c.n_ = n;
  c.folded_ = true;
  c.chart_ = std::make_shared<ChartGroup>(ChartGroup::folded(ambient_sc, s));
  c.eval_ = std::make_shared<TropEvaluator>(*c.chart_, n);
  return c;
}

const DiagramAutomorphism& ConfContext::sigma() const {
  if (!sigma_) throw Error("context carries no automorphism");
  return *sigma_;
}

const PLContext& ConfContext::pl() const {
  if (!pl_) throw Error("context carries no ambient PL machinery");
  return *pl_;
}

long long ConfContext::height_of(const std::vector<IVec>& lambda) const {
  std::vector<IVec> ambient_coords;
  for (const auto& lam : lambda) {
    if (!folded_) {
      ambient_coords.push_back(lam);
    } else {
      IVec coroot(datum_.rank_I, 0);
      for (size_t e = 0; e < sigma_->orbits.size(); ++e)
        for (long long i : sigma_->orbits[e]) coroot[i] = lam[e];
      ambient_coords.push_back(coroot);
    }
  }
  return height_int(datum_, ambient_coords);
}

bool ConfContext::lattice_prefilter(const std::vector<IVec>& lambda) const {
  IVec sum(lambda[0].size(), 0);
  for (const auto& lam : lambda) sum = add(sum, lam);
  if (!folded_) return in_coroot_lattice(datum_, sum);
  // coroot lattice of the fixed subgroup: orbit-basis coordinates, doubled
  // at the adjacent orbit
  for (size_t e = 0; e < sigma_->orbits.size(); ++e)
    if (sigma_->orbit_adjacent[e] && sum[e] % 2 != 0) return false;
  return true;
}

bool ConfContext::lambda_dominant(const IVec& lambda) const {
  if (!folded_) return is_dominant_coweight(datum_, lambda);
  IVec coroot(datum_.rank_I, 0);
  for (size_t e = 0; e < sigma_->orbits.size(); ++e)
    for (long long i : sigma_->orbits[e]) coroot[i] = lambda[e];
  return is_dominant_coweight(datum_, coroot);
}

namespace {

void validate_lambda_tuple(const ConfContext& ctx, const std::vector<IVec>& lambda,
                           const char* who) {
  if (static_cast<int>(lambda.size()) != ctx.n())
    throw Error(std::string(who) + ": lambda arity does not match n");
  size_t want = static_cast<size_t>(ctx.chart().lambda_rank());
  for (const auto& lam : lambda)
    if (lam.size() != want)
      throw Error(std::string(who) + ": coweight has " + std::to_string(lam.size()) +
                  " coordinates, chart expects " + std::to_string(want));
}

void validate_point(const ConfContext& ctx, const TropConfPoint& l, const char* who) {
  if (static_cast<int>(l.h.size()) != ctx.n() - 1 ||
      static_cast<int>(l.u.size()) != ctx.n() - 2)
    throw Error(std::string(who) + ": point has the wrong arity for n");
  size_t want = static_cast<size_t>(ctx.chart().lambda_rank());
  for (const auto& lam : l.h)
    if (lam.size() != want) throw Error(std::string(who) + ": bad h coordinate length");
  size_t letters = static_cast<size_t>(ctx.chart().chart_letters());
  for (const auto& coords : l.u)
    if (coords.size() != letters) throw Error(std::string(who) + ": bad u coordinate length");
}

}  // namespace

bool membership(const ConfContext& ctx, const TropConfPoint& l, const std::vector<IVec>& lambda) {
  validate_lambda_tuple(ctx, lambda, "membership");
  validate_point(ctx, l, "membership");
  for (int i = 0; i + 1 < ctx.n(); ++i)
    if (l.h[i] != lambda[i + 1]) return false;
  if (ctx.eval().ed1_val(l.h, l.u) != lambda[0]) return false;
  return ctx.eval().W_val(l.h, l.u) >= 0;
}

namespace {

struct ScanSetup {
  const ConfContext* ctx;
  std::vector<IVec> h_fixed;
  IVec target;     // lambda_1 minus the h contribution of the linear form
  IMat u_form;     // rows: lambda_rank, cols: total u dimension
  int dims;
  int word_len;
};

ScanSetup make_setup(const ConfContext& ctx, const std::vector<IVec>& lambda) {
  ScanSetup s;
  s.ctx = &ctx;
  s.h_fixed.assign(lambda.begin() + 1, lambda.end());
  int L = ctx.chart().lambda_rank();
  int N = ctx.chart().chart_letters();
  s.word_len = N;
  s.dims = (ctx.n() - 2) * N;
  const auto& form = ctx.eval().ed1_form();
  IVec hpart(L, 0);
  for (size_t slot = 0; slot < s.h_fixed.size(); ++slot)
    for (int r = 0; r < L; ++r)
      for (int k = 0; k < L; ++k) hpart[r] += form.h_coeff[slot][r][k] * s.h_fixed[slot][k];
  s.target = sub(lambda[0], hpart);
  s.u_form.assign(L, IVec(s.dims, 0));
  for (int slot = 0; slot < ctx.n() - 2; ++slot)
    for (int r = 0; r < L; ++r)
      for (int k = 0; k < N; ++k) s.u_form[r][slot * N + k] = form.u_coeff[slot][r][k];
  return s;
}

// DFS with per-equation reachable-interval pruning; candidates satisfying
// the Ed_1 system exactly get the W evaluation.
void scan_range(const ScanSetup& s, long long lo, long long hi, long long first_lo,
                long long first_hi, std::vector<TropConfPoint>& out) {
  int L = static_cast<int>(s.u_form.size());
  int D = s.dims;
  if (D == 0) {
    bool ok = true;
    for (int r = 0; r < L; ++r)
      if (s.target[r] != 0) ok = false;
    if (ok && s.ctx->eval().W_val(s.h_fixed, {}) >= 0) out.push_back({s.h_fixed, {}});
    return;
  }
  // suffix reachable intervals
  IMat suf_min(L, IVec(D + 1, 0)), suf_max(L, IVec(D + 1, 0));
  for (int r = 0; r < L; ++r)
    for (int k = D - 1; k >= 0; --k) {
      long long c = s.u_form[r][k];
      long long a = c * lo, b = c * hi;
      suf_min[r][k] = suf_min[r][k + 1] + std::min(a, b);
      suf_max[r][k] = suf_max[r][k + 1] + std::max(a, b);
    }
  IVec coords(D, 0);
  IVec partial(L, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == D) {
      for (int r = 0; r < L; ++r)
        if (partial[r] != s.target[r]) return;
      std::vector<IVec> u(s.ctx->n() - 2, IVec(s.word_len));
      for (int slot = 0; slot < s.ctx->n() - 2; ++slot)
        for (int j = 0; j < s.word_len; ++j) u[slot][j] = coords[slot * s.word_len + j];
      if (s.ctx->eval().W_val(s.h_fixed, u) >= 0) out.push_back({s.h_fixed, u});
      return;
    }
    long long a = k == 0 ? first_lo : lo;
    long long b = k == 0 ? first_hi : hi;
    for (long long v = a; v <= b; ++v) {
      bool feasible = true;
      for (int r = 0; r < L && feasible; ++r) {
        long long p = partial[r] + s.u_form[r][k] * v;
        if (p + suf_min[r][k + 1] > s.target[r] || p + suf_max[r][k + 1] < s.target[r])
          feasible = false;
      }
      if (!feasible) continue;
      for (int r = 0; r < L; ++r) partial[r] += s.u_form[r][k] * v;
      coords[k] = v;
      rec(k + 1);
      for (int r = 0; r < L; ++r) partial[r] -= s.u_form[r][k] * v;
    }
  };
  rec(0);
}

std::vector<TropConfPoint> scan_box(const ScanSetup& s, long long lo, long long hi, int jobs) {
  if (s.dims == 0 || jobs <= 1 || hi - lo < 2 * jobs) {
    std::vector<TropConfPoint> out;
    scan_range(s, lo, hi, lo, hi, out);
    return out;
  }
  long long width = hi - lo + 1;
  int workers = static_cast<int>(std::min<long long>(jobs, width));
  std::vector<std::vector<TropConfPoint>> results(workers);
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w) {
    long long a = lo + width * w / workers;
    long long b = lo + width * (w + 1) / workers - 1;
    threads.emplace_back([&, w, a, b]() {
      try {
        scan_range(s, lo, hi, a, b, results[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<TropConfPoint> out;
  for (auto& r : results)
    for (auto& p : r) out.push_back(std::move(p));
  return out;
}

}  // namespace

TropPointSet enumerate_C(const ConfContext& ctx, const std::vector<IVec>& lambda,
                         const BoundPolicy& policy) {
  validate_lambda_tuple(ctx, lambda, "enumerate_C");
  for (const auto& lam : lambda)
    if (!ctx.lambda_dominant(lam)) throw Error("enumerate_C: lambda is not dominant");
  TropPointSet set;
  set.lambda = lambda;
  if (!ctx.lattice_prefilter(lambda)) {
    set.box.boundary_clean = true;
    set.box.complete = true;
    return set;
  }
  ScanSetup s = make_setup(ctx, lambda);
  long long H = std::max<long long>(1, ctx.height_of(lambda));
  long long lo = 0;
  long long hi = policy.init_hi > 0 ? policy.init_hi : H;
  for (int attempt = 0;; ++attempt) {
    std::vector<TropConfPoint> pts = scan_box(s, lo, hi, policy.jobs);
    bool dirty = false;
    for (const auto& p : pts)
      for (const auto& slot : p.u)
        for (long long v : slot)
          if (v == lo || v == hi) dirty = true;
    set.points = std::move(pts);
    set.box.lo = lo;
    set.box.hi = hi;
    set.box.growths = attempt;
    if (!dirty) {
      set.box.boundary_clean = true;
      set.box.complete = true;
      break;
    }
    if (attempt >= policy.max_growths) {
      set.box.boundary_clean = false;
      set.box.complete = false;
      if (policy.error_on_dirty)
        throw BoxLimitError("enumerate_C: box growth limit reached with " +
                            std::to_string(set.points.size()) + " points on a dirty box");
      break;
    }
    long long w = hi - lo;
    lo -= w;
    hi += w;
  }
  std::sort(set.points.begin(), set.points.end());
  return set;
}

TropConfPoint sigma_trop_conf(const ConfContext& ctx, const TropConfPoint& l) {
  if (ctx.folded_kind()) throw Error("sigma_trop_conf acts on ambient contexts");
  validate_point(ctx, l, "sigma_trop_conf");
  const DiagramAutomorphism& s = ctx.sigma();
  TropConfPoint r;
  for (const auto& lam : l.h) r.h.push_back(s.apply_cochar(lam));
  for (const auto& coords : l.u) r.u.push_back(sigma_trop_U(ctx.pl(), coords));
  return r;
}

TropPointSet fixed_points(const ConfContext& ctx, const TropPointSet& s) {
  TropPointSet out;
  out.lambda = s.lambda;
  out.box = s.box;
  for (const auto& p : s.points)
    if (sigma_trop_conf(ctx, p) == p) out.points.push_back(p);
  return out;
}

namespace {

IVec orbit_to_coroot(const ConfContext& ambient_ctx, const IVec& folded) {
  const auto& s = ambient_ctx.sigma();
  if (folded.size() != s.orbits.size()) throw Error("folded coweight has the wrong rank");
  IVec coroot(ambient_ctx.datum().rank_I, 0);
  for (size_t e = 0; e < s.orbits.size(); ++e)
    for (long long i : s.orbits[e]) coroot[i] = folded[e];
  return coroot;
}

IVec coroot_to_orbit(const ConfContext& ambient_ctx, const IVec& coroot) {
  const auto& s = ambient_ctx.sigma();
  if (coroot.size() != static_cast<size_t>(ambient_ctx.datum().rank_I))
    throw Error("ambient coweight has the wrong rank");
  IVec folded(s.orbits.size(), 0);
  for (size_t e = 0; e < s.orbits.size(); ++e) {
    folded[e] = coroot[s.orbits[e][0]];
    for (long long i : s.orbits[e])
      if (coroot[i] != folded[e])
        throw Error("coweight is not sigma-invariant");
  }
  return folded;
}

}  // namespace

TropConfPoint iota_expand(const ConfContext& ambient_ctx, const TropConfPoint& folded_point) {
  TropConfPoint r;
  for (const auto& lam : folded_point.h) r.h.push_back(orbit_to_coroot(ambient_ctx, lam));
  for (const auto& coords : folded_point.u)
    r.u.push_back(expand_blocks(ambient_ctx.pl(), coords));
  return r;
}

TropConfPoint iota_collapse(const ConfContext& ambient_ctx, const TropConfPoint& fixed_point) {
  TropConfPoint r;
  for (const auto& lam : fixed_point.h) r.h.push_back(coroot_to_orbit(ambient_ctx, lam));
  for (const auto& coords : fixed_point.u)
    r.u.push_back(collapse_blocks(ambient_ctx.pl(), coords));
  return r;
}

TropConfPoint sum_map_Sigma(const ConfContext& ctx, const TropConfPoint& l) {
  if (ctx.folded_kind()) throw Error("sum_map_Sigma acts on ambient contexts");
  validate_point(ctx, l, "sum_map_Sigma");
  TropConfPoint r;
  for (const auto& lam : l.h) r.h.push_back(s_map(ctx.datum(), ctx.sigma(), lam));
  for (const auto& coords : l.u) r.u.push_back(s_sum_U(ctx.pl(), coords));
  return r;
}

std::vector<IVec> s_map_tuple(const ConfContext& ctx, const std::vector<IVec>& lambda) {
  std::vector<IVec> out;
  for (const auto& lam : lambda) out.push_back(s_map(ctx.datum(), ctx.sigma(), lam));
  return out;
}

nlohmann::ordered_json trop_set_to_json(const TropPointSet& s) {
  nlohmann::ordered_json j;
  j["lambda"] = s.lambda;
  j["count"] = s.count();
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const auto& p : s.points) {
    nlohmann::ordered_json pj;
    pj["h"] = p.h;
    pj["u"] = p.u;
    pts.push_back(pj);
  }
  j["points"] = pts;
  j["box"] = {{"lo", s.box.lo},
              {"hi", s.box.hi},
              {"growths", s.box.growths},
              {"boundary_clean", s.box.boundary_clean},
              {"complete", s.box.complete}};
  return j;
}

}  // namespace satrop
