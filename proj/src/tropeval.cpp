#include "tropeval.hpp"

#include <cassert>

namespace satrop {

PolyMat pm_identity(int n) {
  PolyMat r;
  r.n = n;
  r.den_ord = 0;
  r.a.assign(static_cast<size_t>(n) * n, IntPoly());
  for (int i = 0; i < n; ++i) r.at(i, i) = IntPoly::one();
  return r;
}

PolyMat pm_mul(const PolyMat& x, const PolyMat& y) {
  assert(x.n == y.n);
  PolyMat r;
  r.n = x.n;
  r.den_ord = x.den_ord + y.den_ord;
  r.a.assign(static_cast<size_t>(x.n) * x.n, IntPoly());
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (int j = 0; j < x.n; ++j) {
        if (y.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
      }
    }
  return r;
}

IntPoly poly_submatrix_det(const PolyMat& x, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
  assert(rows.size() == cols.size());
  size_t s = rows.size();
  if (s == 0) return IntPoly::one();
  if (s == 1) return x.at(rows[0], cols[0]);
  if (s == 2)
    return x.at(rows[0], cols[0]) * x.at(rows[1], cols[1]) -
           x.at(rows[0], cols[1]) * x.at(rows[1], cols[0]);
  IntPoly det;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < s; ++j) {
    const IntPoly& piv = x.at(rows[0], cols[j]);
    if (piv.is_zero()) continue;
    std::vector<int> sub_cols;
    for (size_t c = 0; c < s; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    IntPoly term = piv * poly_submatrix_det(x, sub_rows, sub_cols);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

IntPoly pm_det(const PolyMat& x) {
  std::vector<int> idx(x.n);
  for (int i = 0; i < x.n; ++i) idx[i] = i;
  return poly_submatrix_det(x, idx, idx);
}

PolyMat pm_inverse(const PolyMat& x) {
  IntPoly det = pm_det(x);
  if (det.is_zero()) throw GenericityError("pm_inverse: singular matrix");
  PolyMat r;
  r.n = x.n;
  r.den_ord = det.ord() - x.den_ord;
  r.a.assign(static_cast<size_t>(x.n) * x.n, IntPoly());
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      std::vector<int> rows, cols;
      for (int k = 0; k < x.n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      IntPoly c = poly_submatrix_det(x, rows, cols);
      r.at(i, j) = ((i + j) % 2 == 0) ? c : -c;
    }
  return r;
}

PolyMat pm_from_matq(const MatQ& m) {
  int n = static_cast<int>(m.size());
  long long K = 0;
  BigInt L(1);
  auto lcm = [](const BigInt& a, const BigInt& b) {
    return BigInt::divexact(a * b, BigInt::gcd(a, b));
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const RatFun& e = m[i][j];
      if (e.is_zero()) continue;
      // denominator must be a monomial c * t^k
      long long k = e.den().ord();
      if (e.den().degree() != k)
        throw Error("pm_from_matq: entry denominator is not a monomial");
      K = std::max(K, k);
      L = lcm(L, e.den().coeff(static_cast<size_t>(k)) * e.scale().den());
    }
  PolyMat r;
  r.n = n;
  r.den_ord = K;
  r.a.assign(static_cast<size_t>(n) * n, IntPoly());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const RatFun& e = m[i][j];
      if (e.is_zero()) continue;
      long long k = e.den().ord();
      BigInt dc = e.den().coeff(static_cast<size_t>(k));
      BigInt mult = BigInt::divexact(L, dc * e.scale().den()) * e.scale().num();
      r.at(i, j) = e.num().scaled(mult).shifted(K - k);
    }
  return r;
}

namespace {

long long pord(const IntPoly& p) { return p.is_zero() ? RatFun::kValInf : p.ord(); }

// Convolution coefficient of X*Y at degree o.
BigInt conv_coeff(const IntPoly& x, const IntPoly& y, long long o) {
  BigInt s;
  long long dx = x.degree(), dy = y.degree();
  long long lo = std::max<long long>(0, o - dy);
  long long hi = std::min(dx, o);
  for (long long i = lo; i <= hi; ++i) s += x.coeff(static_cast<size_t>(i)) * y.coeff(static_cast<size_t>(o - i));
  return s;
}

// ord(A*D - C*B), or kValInf when the products coincide. All inputs nonzero.
long long ord_of_cross_diff(const IntPoly& a, const IntPoly& d, const IntPoly& c,
                            const IntPoly& b) {
  long long top = std::max(a.degree() + d.degree(), c.degree() + b.degree());
  long long start = std::min(a.ord() + d.ord(), c.ord() + b.ord());
  for (long long o = start; o <= top; ++o) {
    BigInt coeff = conv_coeff(a, d, o) - conv_coeff(c, b, o);
    if (!coeff.is_zero()) return o;
  }
  return RatFun::kValInf;
}

}  // namespace

TropEvaluator::TropEvaluator(const ChartGroup& chart, int n)
    : chart_(&chart), n_(n), m_(chart.msize()), fast_(n == 3) {
  if (n < 2) throw Error("TropEvaluator requires n >= 2");
  w_pm_ = pm_from_matq(chart.w_rep());
  w_inv_pm_ = pm_from_matq(chart.w_rep_inv());
  build_ed1_form();
}

PolyMat TropEvaluator::torus_pm(const IVec& lambda) const {
  IVec exps = chart_->lambda_to_diag_exps(lambda);
  long long shift = 0;
  for (long long e : exps) shift = std::max(shift, -e);
  PolyMat r;
  r.n = m_;
  r.den_ord = shift;
  r.a.assign(static_cast<size_t>(m_) * m_, IntPoly());
  for (int i = 0; i < m_; ++i) r.at(i, i) = IntPoly::monomial(BigInt(1), exps[i] + shift);
  return r;
}

PolyMat TropEvaluator::unipotent_pm(const IVec& coords) const {
  std::vector<RatFun> vals;
  vals.reserve(coords.size());
  for (long long c : coords) vals.push_back(RatFun::monomial(Rational(1), c));
  return pm_from_matq(chart_->unipotent(vals));
}

std::vector<PolyMat> TropEvaluator::config_pms(const std::vector<IVec>& h,
                                               const std::vector<IVec>& u) const {
  assert(n_ == 3);
  std::vector<PolyMat> g(3);
  g[0] = pm_identity(m_);
  g[1] = pm_mul(torus_pm(h[0]), w_pm_);
  g[2] = pm_mul(pm_mul(pm_mul(g[1], unipotent_pm(u[0])), torus_pm(h[1])), w_pm_);
  return g;
}

long long TropEvaluator::an_term_val(const PolyMat& gA, const PolyMat& q1,
                                     const PolyMat& q2) const {
  // M1 = adj(gA) q1, N = adj(gA) q2; scalar denominators cancel in the
  // equal-size minor ratios below.
  PolyMat adjA = pm_inverse(gA);
  adjA.den_ord = 0;
  PolyMat M1 = pm_mul(adjA, q1);
  PolyMat N = pm_mul(adjA, q2);

  std::vector<int> chi_rows;
  if (!chart_->folded_kind()) {
    for (int k = 0; k + 1 < m_; ++k) chi_rows.push_back(k);
  } else {
    for (const auto& orbit : chart_->sigma().orbits)
      chi_rows.push_back(static_cast<int>(orbit[0]));
  }

  long long best = RatFun::kValInf;
  for (int k : chi_rows) {
    std::vector<int> cols, rows_a, rows_t;
    for (int r = k + 1; r < m_; ++r) {
      cols.push_back(r);
      rows_t.push_back(r);
    }
    rows_a.push_back(k);
    for (int r = k + 2; r < m_; ++r) rows_a.push_back(r);

    IntPoly A = poly_submatrix_det(N, rows_a, cols);
    IntPoly B = poly_submatrix_det(N, rows_t, cols);
    IntPoly C = poly_submatrix_det(M1, rows_a, cols);
    IntPoly D = poly_submatrix_det(M1, rows_t, cols);
    if (B.is_zero() || D.is_zero())
      throw GenericityError("tropical evaluation: vanishing trailing minor in an");
    long long v;
    if (A.is_zero() && C.is_zero()) {
      v = RatFun::kValInf;
    } else if (C.is_zero()) {
      v = pord(A) - pord(B);
    } else if (A.is_zero()) {
      v = pord(C) - pord(D);
    } else {
      long long oad = A.ord() + D.ord(), ocb = C.ord() + B.ord();
      long long o = oad != ocb ? std::min(oad, ocb) : ord_of_cross_diff(A, D, C, B);
      v = o == RatFun::kValInf ? RatFun::kValInf : o - (B.ord() + D.ord());
    }
    best = std::min(best, v);
  }
  return best;
}

Configuration TropEvaluator::reference_config(const std::vector<IVec>& h,
                                              const std::vector<IVec>& u) const {
  std::vector<MatQ> hm, um;
  for (const auto& lam : h) hm.push_back(chart_->torus(lam, RatFun::t()));
  for (const auto& coords : u) {
    std::vector<RatFun> vals;
    for (long long c : coords) vals.push_back(RatFun::monomial(Rational(1), c));
    um.push_back(chart_->unipotent(vals));
  }
  return chart_p(*chart_, hm, um);
}

long long TropEvaluator::W_val(const std::vector<IVec>& h, const std::vector<IVec>& u) const {
  if (!fast_) return W_val_reference(h, u);
  std::vector<PolyMat> g = config_pms(h, u);
  long long best = RatFun::kValInf;
  for (int i = 0; i < n_; ++i) {
    int prev = (i + n_ - 1) % n_, next = (i + 1) % n_;
    PolyMat q1 = pm_mul(g[prev], w_pm_);
    PolyMat q2 = pm_mul(g[next], w_pm_);
    best = std::min(best, an_term_val(g[i], q1, q2));
  }
  return best;
}

IVec TropEvaluator::ed1_val(const std::vector<IVec>& h, const std::vector<IVec>& u) const {
  if (!fast_) return ed1_val_reference(h, u);
  std::vector<PolyMat> g = config_pms(h, u);
  PolyMat M = pm_mul(pm_mul(pm_inverse(g[n_ - 1]), g[0]), w_inv_pm_);
  std::vector<long long> vals(m_);
  std::vector<long long> t_ord(m_ + 1, 0);  // ord T_m = 0 for the empty minor
  for (int k = m_ - 1; k >= 0; --k) {
    std::vector<int> idx;
    for (int r = k; r < m_; ++r) idx.push_back(r);
    IntPoly tk = poly_submatrix_det(M, idx, idx);
    if (tk.is_zero()) throw GenericityError("tropical evaluation: vanishing minor in ed");
    t_ord[k] = tk.ord();
  }
  for (int k = 0; k < m_; ++k) vals[k] = t_ord[k] - t_ord[k + 1] - M.den_ord;
  return chart_->diag_vals_to_lambda(vals);
}

long long TropEvaluator::W_val_reference(const std::vector<IVec>& h,
                                         const std::vector<IVec>& u) const {
  return potential_W(reference_config(h, u)).valuation();
}

IVec TropEvaluator::ed1_val_reference(const std::vector<IVec>& h,
                                      const std::vector<IVec>& u) const {
  Configuration c = reference_config(h, u);
  MatQ e = edge_map_Ed(c)[0];
  std::vector<long long> vals;
  for (int k = 0; k < m_; ++k) {
    if (e[k][k].is_zero()) throw GenericityError("ed1 diagonal entry vanished");
    vals.push_back(e[k][k].valuation());
  }
  return chart_->diag_vals_to_lambda(vals);
}

IVec TropEvaluator::ed1_linear(const std::vector<IVec>& h, const std::vector<IVec>& u) const {
  int L = chart_->lambda_rank();
  IVec out(L, 0);
  for (size_t s = 0; s < h.size(); ++s)
    for (int r = 0; r < L; ++r)
      for (size_t k = 0; k < h[s].size(); ++k) out[r] += form_.h_coeff[s][r][k] * h[s][k];
  for (size_t s = 0; s < u.size(); ++s)
    for (int r = 0; r < L; ++r)
      for (size_t k = 0; k < u[s].size(); ++k) out[r] += form_.u_coeff[s][r][k] * u[s][k];
  return out;
}

void TropEvaluator::build_ed1_form() {
  int L = chart_->lambda_rank();
  int N = chart_->chart_letters();
  std::vector<IVec> h0(n_ - 1, IVec(L, 0));
  std::vector<IVec> u0(n_ - 2, IVec(N, 0));
  IVec base = ed1_val(h0, u0);
  for (long long v : base)
    if (v != 0) throw Error("ed1 linear form: nonzero value at the origin");
  form_.h_coeff.assign(n_ - 1, IMat(L, IVec(L, 0)));
  form_.u_coeff.assign(n_ - 2, IMat(L, IVec(N, 0)));
  for (int s = 0; s < n_ - 1; ++s)
    for (int k = 0; k < L; ++k) {
      auto h = h0;
      h[s][k] = 1;
      IVec v = ed1_val(h, u0);
      for (int r = 0; r < L; ++r) form_.h_coeff[s][r][k] = v[r];
    }
  for (int s = 0; s < n_ - 2; ++s)
    for (int k = 0; k < N; ++k) {
      auto u = u0;
      u[s][k] = 1;
      IVec v = ed1_val(h0, u);
      for (int r = 0; r < L; ++r) form_.u_coeff[s][r][k] = v[r];
    }
  // Verify linearity: negated units and a handful of mixed points.
  auto check = [&](const std::vector<IVec>& h, const std::vector<IVec>& u) {
    if (ed1_val(h, u) != ed1_linear(h, u))
      throw Error("ed1 linear form verification failed");
  };
  for (int s = 0; s < n_ - 1; ++s)
    for (int k = 0; k < L; ++k) {
      auto h = h0;
      h[s][k] = -1;
      check(h, u0);
    }
  unsigned long long seed = 0x9e3779b97f4a7c15ULL;
  auto next = [&seed]() {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return static_cast<long long>(seed % 5) - 2;
  };
  for (int trial = 0; trial < 6; ++trial) {
    auto h = h0;
    auto u = u0;
    for (auto& slot : h)
      for (auto& c : slot) c = next();
    for (auto& slot : u)
      for (auto& c : slot) c = next();
    check(h, u);
  }
}

}  // namespace satrop
