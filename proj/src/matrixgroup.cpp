#include "matrixgroup.hpp"

#include <cassert>

namespace satrop {

MatQ mat_identity(int n) {
  MatQ m(n, std::vector<RatFun>(n, RatFun()));
  for (int i = 0; i < n; ++i) m[i][i] = RatFun(1);
  return m;
}

MatQ mat_mul(const MatQ& a, const MatQ& b) {
  size_t n = a.size(), p = b[0].size(), k = b.size();
  MatQ r(n, std::vector<RatFun>(p, RatFun()));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < p; ++j) {
        if (b[t][j].is_zero()) continue;
        r[i][j] += a[i][t] * b[t][j];
      }
    }
  return r;
}

MatQ mat_scale(const MatQ& a, const RatFun& s) {
  MatQ r = a;
  for (auto& row : r)
    for (auto& e : row) e *= s;
  return r;
}

MatQ mat_from_diag(const std::vector<RatFun>& d) {
  MatQ r(d.size(), std::vector<RatFun>(d.size(), RatFun()));
  for (size_t i = 0; i < d.size(); ++i) r[i][i] = d[i];
  return r;
}

bool mat_equal(const MatQ& a, const MatQ& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

bool is_upper_unipotent(const MatQ& a) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) {
      if (i == j && !(a[i][j] == RatFun(1))) return false;
      if (i > j && !a[i][j].is_zero()) return false;
    }
  return true;
}

MatQ mat_inverse(const MatQ& a) {
  int n = static_cast<int>(a.size());
  MatQ m = a;
  MatQ inv = mat_identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw GenericityError("matrix inverse: singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    RatFun f = m[col][col].inverse();
    for (int j = 0; j < n; ++j) {
      m[col][j] *= f;
      inv[col][j] *= f;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      RatFun g = m[i][col];
      for (int j = 0; j < n; ++j) {
        m[i][j] -= g * m[col][j];
        inv[i][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

RatFun mat_det(const MatQ& a) {
  int n = static_cast<int>(a.size());
  MatQ m = a;
  RatFun det(1);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return RatFun();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    RatFun f = m[col][col].inverse();
    for (int i = col + 1; i < n; ++i) {
      if (m[i][col].is_zero()) continue;
      RatFun g = m[i][col] * f;
      for (int j = col; j < n; ++j) m[i][j] -= g * m[col][j];
    }
  }
  return det;
}

RatFun ratfun_pow(const RatFun& f, long long e) {
  if (e == 0) return RatFun(1);
  RatFun base = e < 0 ? f.inverse() : f;
  long long k = e < 0 ? -e : e;
  RatFun r(1);
  while (k) {
    if (k & 1) r *= base;
    base = (k >>= 1) ? base * base : base;
  }
  return r;
}

ULPair ul_decompose(const MatQ& m) {
  int n = static_cast<int>(m.size());
  ULPair res;
  res.L = m;
  std::vector<std::tuple<int, int, RatFun>> ops;
  for (int k = n - 1; k >= 1; --k) {
    if (res.L[k][k].is_zero())
      throw GenericityError("ul_decompose: vanishing trailing minor");
    RatFun inv = res.L[k][k].inverse();
    for (int i = 0; i < k; ++i) {
      if (res.L[i][k].is_zero()) continue;
      RatFun f = res.L[i][k] * inv;
      for (int j = 0; j <= k; ++j) res.L[i][j] -= f * res.L[k][j];
      ops.emplace_back(i, k, f);
    }
  }
  if (res.L[0][0].is_zero()) throw GenericityError("ul_decompose: vanishing determinant");
  res.u = mat_identity(n);
  // u = product of (I + f e_{ik}) in elimination order: column_k += f * column_i.
  for (const auto& [i, k, f] : ops)
    for (int r = 0; r < n; ++r)
      if (!res.u[r][i].is_zero()) res.u[r][k] += f * res.u[r][i];
  return res;
}

// --- ChartGroup -------------------------------------------------------

const DiagramAutomorphism& ChartGroup::sigma() const {
  if (!sigma_) throw Error("chart group carries no automorphism");
  return *sigma_;
}

int ChartGroup::lambda_rank() const {
  if (folded_) return static_cast<int>(sigma_->orbits.size());
  return datum_.lattice_rank;
}

MatQ ChartGroup::x_single(int i, const RatFun& a) const {
  if (i < 0 || i + 1 >= m_) throw Error("root subgroup index out of range");
  MatQ m = mat_identity(m_);
  m[i][i + 1] = a;
  return m;
}

MatQ ChartGroup::y_single(int i, const RatFun& a) const {
  if (i < 0 || i + 1 >= m_) throw Error("root subgroup index out of range");
  MatQ m = mat_identity(m_);
  m[i + 1][i] = a;
  return m;
}

MatQ ChartGroup::x(int i, const RatFun& a) const {
  if (folded_ && (i < 0 || i >= static_cast<int>(sigma_->orbits.size())))
    throw Error("orbit letter out of range");
  if (!folded_) return x_single(i, a);
  const IVec& orbit = sigma_->orbits[i];
  if (sigma_->orbit_adjacent[i]) {
    int p = static_cast<int>(orbit[0]), q = static_cast<int>(orbit[1]);
    return mat_mul(mat_mul(x_single(p, a), x_single(q, a + a)), x_single(p, a));
  }
  MatQ m = mat_identity(m_);
  for (long long p : orbit) m = mat_mul(m, x_single(static_cast<int>(p), a));
  return m;
}

MatQ ChartGroup::y(int i, const RatFun& a) const {
  if (folded_ && (i < 0 || i >= static_cast<int>(sigma_->orbits.size())))
    throw Error("orbit letter out of range");
  if (!folded_) return y_single(i, a);
  const IVec& orbit = sigma_->orbits[i];
  if (sigma_->orbit_adjacent[i]) {
    int p = static_cast<int>(orbit[0]), q = static_cast<int>(orbit[1]);
    RatFun half = a * RatFun(Rational(1, 2));
    return mat_mul(mat_mul(y_single(p, half), y_single(q, a)), y_single(p, half));
  }
  MatQ m = mat_identity(m_);
  for (long long p : orbit) m = mat_mul(m, y_single(static_cast<int>(p), a));
  return m;
}

MatQ ChartGroup::sbar(int i) const {
  return mat_mul(mat_mul(y(i, RatFun(1)), x(i, RatFun(-1))), y(i, RatFun(1)));
}

IVec ChartGroup::lambda_to_diag_exps(const IVec& lambda) const {
  if (!folded_ && datum_.form == Form::gl) {
    if (lambda.size() != static_cast<size_t>(m_)) throw Error("lambda has wrong rank");
    return lambda;
  }
  IVec coroot_coords;
  if (folded_) {
    if (lambda.size() != sigma_->orbits.size()) throw Error("lambda has wrong folded rank");
    coroot_coords.assign(m_ - 1, 0);
    for (size_t e = 0; e < sigma_->orbits.size(); ++e)
      for (long long i : sigma_->orbits[e]) coroot_coords[i] = lambda[e];
  } else {
    if (lambda.size() != static_cast<size_t>(m_ - 1)) throw Error("lambda has wrong rank");
    coroot_coords = lambda;
  }
  IVec exps(m_, 0);
  exps[0] = coroot_coords[0];
  for (int k = 1; k < m_ - 1; ++k) exps[k] = coroot_coords[k] - coroot_coords[k - 1];
  exps[m_ - 1] = -coroot_coords[m_ - 2];
  return exps;
}

IVec ChartGroup::diag_vals_to_lambda(const std::vector<long long>& vals) const {
  if (static_cast<int>(vals.size()) != m_) throw Error("diagonal valuation length mismatch");
  if (!folded_ && datum_.form == Form::gl) return IVec(vals.begin(), vals.end());
  long long total = 0;
  for (long long v : vals) total += v;
  if (total != 0) throw GenericityError("diagonal valuations do not define an SL cocharacter");
  IVec coroot_coords(m_ - 1, 0);
  long long run = 0;
  for (int k = 0; k < m_ - 1; ++k) {
    run += vals[k];
    coroot_coords[k] = run;
  }
  if (!folded_) return coroot_coords;
  IVec lambda(sigma_->orbits.size(), 0);
  for (size_t e = 0; e < sigma_->orbits.size(); ++e) {
    lambda[e] = coroot_coords[sigma_->orbits[e][0]];
    for (long long i : sigma_->orbits[e])
      if (coroot_coords[i] != lambda[e])
        throw GenericityError("diagonal valuations are not sigma-symmetric");
  }
  return lambda;
}

MatQ ChartGroup::torus(const IVec& lambda, const RatFun& base) const {
  IVec exps = lambda_to_diag_exps(lambda);
  std::vector<RatFun> d;
  d.reserve(m_);
  for (long long e : exps) d.push_back(ratfun_pow(base, e));
  return mat_from_diag(d);
}

MatQ ChartGroup::unipotent(const std::vector<RatFun>& vals) const {
  if (vals.size() != chart_word_.size()) throw Error("unipotent: wrong number of chart values");
  MatQ m = mat_identity(m_);
  for (size_t k = 0; k < vals.size(); ++k)
    m = mat_mul(m, x(static_cast<int>(chart_word_[k]), vals[k]));
  return m;
}

RatFun ChartGroup::chi(const MatQ& u) const {
  RatFun s;
  if (!folded_) {
    for (int k = 0; k + 1 < m_; ++k) s += u[k][k + 1];
    return s;
  }
  for (size_t e = 0; e < sigma_->orbits.size(); ++e) {
    int i = static_cast<int>(sigma_->orbits[e][0]);
    RatFun c = u[i][i + 1];
    if (sigma_->orbit_adjacent[e]) c *= RatFun(Rational(1, 2));
    s += c;
  }
  return s;
}

MatQ ChartGroup::sigma_on_matrix(const MatQ& g) const {
  if (sigma_w_.empty()) throw Error("no pinned automorphism on this chart group");
  int n = m_;
  MatQ gt(n, std::vector<RatFun>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gt[i][j] = g[j][i];
  return mat_mul(mat_mul(sigma_w_, mat_inverse(gt)), mat_inverse(sigma_w_));
}

void ChartGroup::finish(bool folded) {
  folded_ = folded;
  // w representative over the chart word.
  MatQ w = mat_identity(m_);
  for (long long i : chart_word_) w = mat_mul(w, sbar(static_cast<int>(i)));
  w_rep_ = w;
  w_rep_inv_ = mat_inverse(w);
  MatQ sq = mat_mul(w, w);
  sG_ = sq[0][0];
  MatQ expect = mat_scale(mat_identity(m_), sG_);
  if (!mat_equal(sq, expect) || !(sG_ * sG_ == RatFun(1)))
    throw Error("chart group: w_rep^2 is not a central square root of 1");

  if (folded_) {
    // hat s_eta = h_eta * bar s_eta, and hat w_0 = h * bar w_0 with the
    // explicit correction torus element in the adjacent-orbit case.
    ChartGroup amb = ChartGroup::ambient(datum_, *sigma_);
    for (size_t e = 0; e < sigma_->orbits.size(); ++e) {
      const IVec& orbit = sigma_->orbits[e];
      MatQ sb = mat_identity(m_);
      std::vector<int> letters;
      if (sigma_->orbit_adjacent[e])
        letters = {static_cast<int>(orbit[0]), static_cast<int>(orbit[1]),
                   static_cast<int>(orbit[0])};
      else
        for (long long i : orbit) letters.push_back(static_cast<int>(i));
      for (int i : letters) sb = mat_mul(sb, amb.sbar(i));
      MatQ h_eta = mat_identity(m_);
      if (sigma_->orbit_adjacent[e]) {
        IVec cc(m_ - 1, 0);
        cc[orbit[0]] = 1;
        cc[orbit[1]] = 1;
        // alpha_i^vee(2) alpha_j^vee(2)
        IVec exps(m_, 0);
        exps[0] = cc[0];
        for (int k = 1; k < m_ - 1; ++k) exps[k] = cc[k] - cc[k - 1];
        exps[m_ - 1] = -cc[m_ - 2];
        std::vector<RatFun> d;
        for (long long ex : exps) d.push_back(ratfun_pow(RatFun(2), ex));
        h_eta = mat_from_diag(d);
      }
      if (!mat_equal(sbar(static_cast<int>(e)), mat_mul(h_eta, sb)))
        throw Error("chart group: hat s_eta != h_eta * bar s_eta");
    }
    // correction element h for hat w_0 = h * bar w_0
    MatQ w0bar = amb.w_rep();
    MatQ h = mat_identity(m_);
    if (has_adjacent_orbit(*sigma_)) {
      // ambient type A_{2n}: h = prod_k (alpha_k^vee(2) alpha_{2n+1-k}^vee(2))^k
      int r = datum_.rank_I;  // = 2n
      int nn = r / 2;
      IVec cc(r, 0);
      for (int k = 1; k <= nn; ++k) {
        cc[k - 1] += k;
        cc[r - k] += k;
      }
      IVec exps(m_, 0);
      exps[0] = cc[0];
      for (int k = 1; k < m_ - 1; ++k) exps[k] = cc[k] - cc[k - 1];
      exps[m_ - 1] = -cc[m_ - 2];
      std::vector<RatFun> d;
      for (long long ex : exps) d.push_back(ratfun_pow(RatFun(2), ex));
      h = mat_from_diag(d);
    }
    if (!mat_equal(w_rep_, mat_mul(h, w0bar)))
      throw Error("chart group: hat w_0 != h * bar w_0");
  }

  // Pinned automorphism conjugator, when a nontrivial sigma is attached to
  // an ambient chart.
  if (!folded_ && sigma_ && sigma_->order > 1) {
    MatQ w(m_, std::vector<RatFun>(m_, RatFun()));
    for (int i = 0; i < m_; ++i)
      w[i][m_ - 1 - i] = RatFun(((m_ - i) % 2 == 0) ? 1 : -1);
    sigma_w_ = w;
    RatFun tt = RatFun::t();
    for (int i = 0; i < datum_.rank_I; ++i) {
      int pi = static_cast<int>(sigma_->perm[i]);
      if (!mat_equal(sigma_on_matrix(x_single(i, tt)), x_single(pi, tt)) ||
          !mat_equal(sigma_on_matrix(y_single(i, tt)), y_single(pi, tt)))
        throw Error("chart group: sigma conjugator does not preserve the pinning");
    }
  }
}

ChartGroup ChartGroup::ambient(const RootDatum& datum) {
  if (datum.type.family != Family::A)
    throw Error("matrix engine covers type A ambients only");
  ChartGroup g;
  g.datum_ = datum;
  g.m_ = datum.form == Form::gl ? datum.lattice_rank : datum.rank_I + 1;
  if (datum.form != Form::gl && datum.form != Form::simply_connected)
    throw Error("matrix engine covers the GL and simply connected forms only");
  g.chart_word_ = longest_word(datum);
  g.finish(false);
  return g;
}

ChartGroup ChartGroup::ambient(const RootDatum& datum, const DiagramAutomorphism& s) {
  if (datum.type.family != Family::A)
    throw Error("matrix engine covers type A ambients only");
  if (datum.form != Form::gl && datum.form != Form::simply_connected)
    throw Error("matrix engine covers the GL and simply connected forms only");
  ChartGroup g;
  g.datum_ = datum;
  g.sigma_ = s;
  g.words_ = standardized_words(datum, s);
  g.m_ = datum.form == Form::gl ? datum.lattice_rank : datum.rank_I + 1;
  g.chart_word_ = g.words_.inflated_word;
  g.finish(false);
  return g;
}

ChartGroup ChartGroup::folded(const RootDatum& ambient_datum, const DiagramAutomorphism& s) {
  if (ambient_datum.type.family != Family::A || ambient_datum.form != Form::simply_connected)
    throw Error("folded chart groups live inside simply connected type A ambients");
  if (s.order < 2) throw Error("folded chart group requires a nontrivial automorphism");
  ChartGroup g;
  g.datum_ = ambient_datum;
  g.sigma_ = s;
  g.words_ = standardized_words(ambient_datum, s);
  g.m_ = ambient_datum.rank_I + 1;
  g.chart_word_ = g.words_.folded_word;
  g.finish(true);
  return g;
}

// --- configurations ---------------------------------------------------

MatQ flag_rep(const Configuration& c, int i) {
  return mat_mul(c.g[i], c.chart->w_rep());
}

MatQ ed(const ChartGroup& g, const MatQ& g1, const MatQ& g2) {
  MatQ m = mat_mul(mat_mul(mat_inverse(g1), g2), g.w_rep_inv());
  ULPair ul = ul_decompose(m);
  std::vector<RatFun> d;
  for (size_t k = 0; k < ul.L.size(); ++k) d.push_back(ul.L[k][k]);
  return mat_from_diag(d);
}

MatQ an(const ChartGroup& g, const MatQ& q1, const MatQ& gA, const MatQ& q2) {
  (void)g;
  MatQ gAinv = mat_inverse(gA);
  ULPair first = ul_decompose(mat_mul(gAinv, q1));
  MatQ phi = mat_mul(mat_inverse(first.u), gAinv);
  ULPair second = ul_decompose(mat_mul(phi, q2));
  return second.u;
}

Configuration chart_p(const ChartGroup& g, const std::vector<MatQ>& h,
                      const std::vector<MatQ>& u) {
  int n = static_cast<int>(h.size()) + 1;
  if (n < 2) throw Error("chart_p requires n >= 2");
  if (u.size() + 2 != static_cast<size_t>(n)) throw Error("chart_p: wrong number of angles");
  Configuration c;
  c.chart = &g;
  c.g.resize(n);
  c.g[0] = mat_identity(g.msize());
  c.g[1] = mat_mul(h[0], g.w_rep());
  for (int k = 2; k < n; ++k) {
    ULPair norm = ul_decompose(mat_mul(mat_inverse(c.g[k - 1]), g.w_rep()));
    MatQ step = mat_mul(u[k - 2], mat_mul(h[k - 1], g.w_rep()));
    c.g[k] = mat_mul(mat_mul(c.g[k - 1], norm.u), step);
  }
  for (int i = 2; i <= n; ++i)
    if (!mat_equal(config_h(c, i), h[i - 2]))
      throw Error("chart_p: edge invariant round-trip failed");
  for (int j = 2; j <= n - 1; ++j)
    if (!mat_equal(config_u(c, j), u[j - 2]))
      throw Error("chart_p: angle invariant round-trip failed");
  return c;
}

MatQ config_h(const Configuration& c, int i) {
  return ed(*c.chart, c.g[i - 2], c.g[i - 1]);
}

MatQ config_u(const Configuration& c, int j) {
  return an(*c.chart, flag_rep(c, 0), c.g[j - 1], flag_rep(c, j));
}

RatFun potential_W(const Configuration& c) {
  int n = c.n();
  RatFun w;
  for (int i = 0; i < n; ++i) {
    int prev = (i + n - 1) % n, next = (i + 1) % n;
    MatQ u = an(*c.chart, flag_rep(c, prev), c.g[i], flag_rep(c, next));
    w += c.chart->chi(u);
  }
  return w;
}

std::vector<MatQ> edge_map_Ed(const Configuration& c) {
  int n = c.n();
  std::vector<MatQ> out;
  out.push_back(ed(*c.chart, mat_scale(c.g[n - 1], c.chart->s_G()), c.g[0]));
  for (int i = 1; i < n; ++i) out.push_back(ed(*c.chart, c.g[i - 1], c.g[i]));
  return out;
}

Configuration cyclic_shift(const Configuration& c) {
  Configuration r;
  r.chart = c.chart;
  r.g.push_back(mat_scale(c.g[c.n() - 1], c.chart->s_G()));
  for (int i = 0; i + 1 < c.n(); ++i) r.g.push_back(c.g[i]);
  return r;
}

Configuration sigma_config(const Configuration& c) {
  Configuration r;
  r.chart = c.chart;
  for (const auto& g : c.g) r.g.push_back(c.chart->sigma_on_matrix(g));
  return r;
}

bool config_equal(const Configuration& a, const Configuration& b) {
  if (a.n() != b.n() || a.chart != b.chart) return false;
  int n = a.n();
  for (int i = 2; i <= n; ++i)
    if (!mat_equal(config_h(a, i), config_h(b, i))) return false;
  for (int j = 2; j <= n - 1; ++j)
    if (!mat_equal(config_u(a, j), config_u(b, j))) return false;
  return true;
}

}  // namespace satrop
