#include "oracle.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace satrop {

RepOracle::RepOracle(const RootDatum& d) : d_(d) {
  // Symmetrizers: d_i a_ij = d_j a_ji, propagated along the Dynkin graph.
  int n = d_.rank_I;
  sym_.assign(n, Rational(0));
  for (int start = 0; start < n; ++start) {
    if (!sym_[start].is_zero()) continue;
    sym_[start] = Rational(1);
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (i == j || d_.cartan[i][j] == 0 || !sym_[j].is_zero()) continue;
        sym_[j] = sym_[i] * Rational(d_.cartan[i][j], d_.cartan[j][i]);
        q.push(j);
      }
    }
  }
}

QVec RepOracle::to_q(const IVec& v) const {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
  return q;
}

Rational RepOracle::form(const QVec& x, const QVec& y) const {
  if (d_.form == Form::gl) {
    Rational s(0);
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
  }
  // Express x in the simple-root basis and use (alpha_i, y) = d_i <alpha_i^vee, y>.
  size_t n = x.size();
  QMat m(n, QVec(d_.rank_I + 1));
  for (size_t r = 0; r < n; ++r) {
    for (int c = 0; c < d_.rank_I; ++c) m[r][c] = Rational(d_.simple_roots[c][r]);
    m[r][d_.rank_I] = x[r];
  }
  // Gaussian elimination (square for semisimple forms).
  size_t rows = n;
  size_t cols = static_cast<size_t>(d_.rank_I);
  std::vector<size_t> pivot_row(cols, SIZE_MAX);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t p = row;
    while (p < rows && m[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    Rational inv = Rational(1) / m[row][col];
    for (size_t j = col; j <= cols; ++j) m[row][j] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (size_t j = col; j <= cols; ++j) m[r][j] -= f * m[row][j];
    }
    pivot_row[col] = row;
    ++row;
  }
  Rational s(0);
  for (size_t c = 0; c < cols; ++c) {
    if (pivot_row[c] == SIZE_MAX) continue;
    Rational coord = m[pivot_row[c]][cols];
    if (coord.is_zero()) continue;
    Rational pair(0);
    for (size_t k = 0; k < y.size(); ++k)
      pair += Rational(d_.simple_coroots[c][k]) * y[k];
    s += coord * sym_[c] * pair;
  }
  return s;
}

IVec RepOracle::dominant_rep(const IVec& x) const {
  IVec v = x;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < d_.rank_I; ++i) {
      if (dot(d_.simple_coroots[i], v) < 0) {
        v = reflect_char(d_, i, v);
        moved = true;
      }
    }
  }
  return v;
}

std::vector<IVec> RepOracle::weyl_orbit(const IVec& dominant) const {
  std::set<IVec> seen{dominant};
  std::vector<IVec> queue{dominant};
  for (size_t q = 0; q < queue.size(); ++q)
    for (int i = 0; i < d_.rank_I; ++i) {
      IVec r = reflect_char(d_, i, queue[q]);
      if (seen.insert(r).second) queue.push_back(r);
    }
  return queue;
}

std::vector<IVec> RepOracle::dominant_below(const IVec& lambda) const {
  std::set<IVec> seen{lambda};
  std::vector<IVec> queue{lambda};
  for (size_t q = 0; q < queue.size(); ++q)
    for (const auto& beta : d_.positive_roots) {
      IVec r = sub(queue[q], beta);
      if (!is_dominant_char(d_, r)) continue;
      if (seen.insert(r).second) queue.push_back(r);
    }
  return queue;
}

WeightMap RepOracle::character_unlocked(const IVec& lambda) {
  auto it = char_memo_.find(lambda);
  if (it != char_memo_.end()) return it->second;
  if (!is_dominant_char(d_, lambda)) throw Error("character: weight is not dominant");
  std::vector<IVec> doms = dominant_below(lambda);
  // Freudenthal, highest weights first.
  QVec lam_rho = to_q(lambda);
  for (int k = 0; k < d_.lattice_rank; ++k) lam_rho[k] += d_.rho[k];
  Rational top = form(lam_rho, lam_rho);
  std::sort(doms.begin(), doms.end(), [&](const IVec& a, const IVec& b) {
    // sort by decreasing height of the weight (increasing depth below lambda)
    Rational ha(0), hb(0);
    for (int k = 0; k < d_.lattice_rank; ++k) {
      ha += Rational(a[k]) * d_.rho_vee[k];
      hb += Rational(b[k]) * d_.rho_vee[k];
    }
    if (ha != hb) return hb < ha;
    return a < b;
  });
  WeightMap mult;
  mult[lambda] = 1;
  for (const auto& mu : doms) {
    if (mu == lambda) continue;
    QVec mu_rho = to_q(mu);
    for (int k = 0; k < d_.lattice_rank; ++k) mu_rho[k] += d_.rho[k];
    Rational denom = top - form(mu_rho, mu_rho);
    Rational num(0);
    for (const auto& beta : d_.positive_roots) {
      for (long long k = 1;; ++k) {
        IVec nu = add(mu, scale(beta, k));
        IVec nud = dominant_rep(nu);
        auto found = mult.find(nud);
        if (found == mult.end()) break;  // above the support in this direction
        num += Rational(found->second) * form(to_q(nu), to_q(beta));
      }
    }
    Rational m = Rational(2) * num / denom;
    if (!m.is_integer()) throw Error("Freudenthal produced a non-integer multiplicity");
    if (m.sign() < 0) throw Error("Freudenthal produced a negative multiplicity");
    if (m.sign() > 0) mult[mu] = m.num().to_i64();
  }
  char_memo_[lambda] = mult;
  return mult;
}

WeightMap RepOracle::character(const IVec& lambda) {
  std::lock_guard<std::mutex> g(lock_);
  return character_unlocked(lambda);
}

long long RepOracle::weight_multiplicity(const IVec& lambda, const IVec& mu) {
  WeightMap c = character(lambda);
  auto it = c.find(dominant_rep(mu));
  return it == c.end() ? 0 : it->second;
}

Rational RepOracle::dim_weyl(const IVec& lambda) const {
  QVec lr = to_q(lambda);
  for (int k = 0; k < d_.lattice_rank; ++k) lr[k] += d_.rho[k];
  Rational num(1), den(1);
  for (const auto& beta : d_.positive_roots) {
    num *= form(lr, to_q(beta));
    den *= form(d_.rho, to_q(beta));
  }
  return num / den;
}

long long RepOracle::dim(const IVec& lambda) {
  WeightMap c = character(lambda);
  long long total = 0;
  for (const auto& [w, m] : c) total += m * static_cast<long long>(weyl_orbit(w).size());
  return total;
}

WeightMap RepOracle::tensor_unlocked(const IVec& lambda, const IVec& mu) {
  std::pair<IVec, IVec> key = std::minmax(lambda, mu);
  auto it = tensor_memo_.find(key);
  if (it != tensor_memo_.end()) return it->second;
  // Klimyk: run over the weights of the smaller factor.
  IVec big = lambda, small = mu;
  if (dim_weyl(big) < dim_weyl(small)) std::swap(big, small);
  WeightMap smallchar = character_unlocked(small);
  QVec shift = to_q(big);
  for (int k = 0; k < d_.lattice_rank; ++k) shift[k] += d_.rho[k];
  std::map<IVec, long long> acc;
  for (const auto& [domw, m] : smallchar) {
    for (const auto& w : weyl_orbit(domw)) {
      QVec xi = shift;
      for (int k = 0; k < d_.lattice_rank; ++k) xi[k] += Rational(w[k]);
      // conjugate xi to the dominant chamber, tracking the sign
      int sign = 1;
      bool wall = false;
      bool moved = true;
      while (moved && !wall) {
        moved = false;
        for (int i = 0; i < d_.rank_I; ++i) {
          Rational p(0);
          for (int k = 0; k < d_.lattice_rank; ++k)
            p += Rational(d_.simple_coroots[i][k]) * xi[k];
          if (p.is_zero()) {
            wall = true;
            break;
          }
          if (p.sign() < 0) {
            for (int k = 0; k < d_.lattice_rank; ++k)
              xi[k] -= p * Rational(d_.simple_roots[i][k]);
            sign = -sign;
            moved = true;
          }
        }
      }
      if (wall) continue;
      IVec nu(d_.lattice_rank);
      bool integral = true;
      for (int k = 0; k < d_.lattice_rank; ++k) {
        Rational c = xi[k] - d_.rho[k];
        if (!c.is_integer()) integral = false;
        else nu[k] = c.num().to_i64();
      }
      if (!integral) throw Error("Klimyk produced a non-integral weight");
      acc[nu] += sign * m;
    }
  }
  WeightMap out;
  for (const auto& [nu, m] : acc) {
    if (m == 0) continue;
    if (m < 0) throw Error("Klimyk produced a negative multiplicity");
    out[nu] = m;
  }
  tensor_memo_[key] = out;
  return out;
}

WeightMap RepOracle::tensor_decompose(const IVec& lambda, const IVec& mu) {
  std::lock_guard<std::mutex> g(lock_);
  return tensor_unlocked(lambda, mu);
}

long long RepOracle::invariant_dim(std::vector<IVec> lambdas) {
  for (const auto& lam : lambdas)
    if (!is_dominant_char(d_, lam)) throw Error("invariant_dim: weight is not dominant");
  if (lambdas.empty()) return 1;
  std::lock_guard<std::mutex> g(lock_);
  std::sort(lambdas.begin(), lambdas.end(), [&](const IVec& a, const IVec& b) {
    Rational da = dim_weyl(a), db = dim_weyl(b);
    if (da != db) return da < db;
    return a < b;
  });
  IVec last = lambdas.back();
  lambdas.pop_back();
  IVec target = dual_char(d_, last);
  if (lambdas.empty()) return last == IVec(d_.lattice_rank, 0) ? 1 : 0;
  WeightMap acc;
  acc[lambdas[0]] = 1;
  for (size_t i = 1; i < lambdas.size(); ++i) {
    WeightMap next;
    for (const auto& [nu, m] : acc) {
      WeightMap part = tensor_unlocked(nu, lambdas[i]);
      for (const auto& [w, c] : part) next[w] += m * c;
    }
    acc = std::move(next);
  }
  auto it = acc.find(target);
  return it == acc.end() ? 0 : it->second;
}

long long twining_rhs(const RootDatum& g_datum, const DiagramAutomorphism& sigma_on_g,
                      const std::vector<IVec>& lambdas) {
  FoldedDatum f = fold(g_datum, sigma_on_g);
  std::vector<IVec> translated;
  for (const auto& lam : lambdas) {
    if (!is_dominant_char(g_datum, lam)) throw Error("twining_rhs: weight is not dominant");
    translated.push_back(fold_char(f, g_datum, sigma_on_g, lam));
  }
  RepOracle oracle(f.folded);
  return oracle.invariant_dim(translated);
}

std::vector<SaturationRow> saturation_scan(RepOracle& oracle,
                                           const std::vector<std::vector<IVec>>& tuples,
                                           int factor, int n_max) {
  std::vector<SaturationRow> rows;
  for (const auto& tuple : tuples) {
    SaturationRow row;
    row.lambda = tuple;
    for (int N = 1; N <= n_max; ++N) {
      std::vector<IVec> scaled;
      for (const auto& lam : tuple) scaled.push_back(scale(lam, N));
      if (oracle.invariant_dim(scaled) > 0) {
        row.least_nonzero_N = N;
        break;
      }
    }
    if (row.least_nonzero_N > 0) {
      std::vector<IVec> scaled;
      for (const auto& lam : tuple) scaled.push_back(scale(lam, factor));
      row.dim_at_factor = oracle.invariant_dim(scaled);
      row.ok = row.dim_at_factor > 0;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace satrop
