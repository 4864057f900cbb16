#include "rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace satrop {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
  }
  throw Error(std::string("unknown Cartan family '") + c + "'");
}

std::string form_name(Form f) {
  switch (f) {
    case Form::simply_connected: return "sc";
    case Form::adjoint: return "adjoint";
    case Form::gl: return "gl";
  }
  return "?";
}

Form form_from_name(const std::string& s) {
  if (s == "sc" || s == "simply_connected") return Form::simply_connected;
  if (s == "adjoint" || s == "ad") return Form::adjoint;
  if (s == "gl" || s == "GL") return Form::gl;
  throw Error("unknown form '" + s + "'");
}

std::string CartanType::to_string() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

bool cartan_type_admissible(CartanType t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B:
    case Family::C: return t.rank >= 2;
    case Family::D: return t.rank >= 4;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

IMat cartan_matrix(CartanType t) {
  if (!cartan_type_admissible(t))
    throw Error("inadmissible Cartan type " + t.to_string());
  int n = t.rank;
  IMat a(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case Family::E:
      edge(0, 2);
      edge(2, 3);
      edge(3, 4);
      edge(4, 5);
      edge(1, 3);
      if (n >= 7) edge(5, 6);
      if (n == 8) edge(6, 7);
      break;
    case Family::F:
      edge(0, 1);
      edge(1, 2);
      edge(2, 3);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case Family::G:
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

long long dot(const IVec& a, const IVec& b) {
  assert(a.size() == b.size());
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IVec add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IVec sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IVec scale(const IVec& a, long long s) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

IVec mat_apply(const IMat& m, const IVec& v) {
  IVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    assert(m[i].size() == v.size());
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  }
  return r;
}

long long pairing(const RootDatum& d, const IVec& cochar, const IVec& chr) {
  (void)d;
  return dot(cochar, chr);
}

IVec reflect_char(const RootDatum& d, int i, const IVec& x) {
  long long c = dot(d.simple_coroots[i], x);
  return sub(x, scale(d.simple_roots[i], c));
}

IVec reflect_cochar(const RootDatum& d, int i, const IVec& v) {
  long long c = dot(v, d.simple_roots[i]);
  return sub(v, scale(d.simple_coroots[i], c));
}

bool is_dominant_coweight(const RootDatum& d, const IVec& v) {
  for (int j = 0; j < d.rank_I; ++j)
    if (dot(v, d.simple_roots[j]) < 0) return false;
  return true;
}

bool is_dominant_char(const RootDatum& d, const IVec& x) {
  for (int j = 0; j < d.rank_I; ++j)
    if (dot(d.simple_coroots[j], x) < 0) return false;
  return true;
}

Rational height(const RootDatum& d, const std::vector<IVec>& coweights) {
  Rational h(0);
  for (const auto& v : coweights) {
    assert(v.size() == static_cast<size_t>(d.lattice_rank));
    for (int k = 0; k < d.lattice_rank; ++k) h += Rational(v[k]) * d.rho[k];
  }
  return h;
}

long long height_int(const RootDatum& d, const std::vector<IVec>& coweights) {
  Rational h = height(d, coweights);
  if (!h.is_integer()) throw Error("height is not integral for this coweight tuple");
  return h.num().to_i64();
}

namespace {

// Solve (columns of basis_rows^T) * c = x over Q. basis_rows holds the
// spanning vectors as rows. Returns nullopt when x is outside the span.
std::optional<QVec> solve_in_span(const IMat& basis_rows, const IVec& x) {
  size_t k = basis_rows.size();
  size_t n = x.size();
  // Augmented system: n equations, k unknowns.
  QMat m(n, QVec(k + 1));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < k; ++c) m[r][c] = Rational(basis_rows[c][r]);
    m[r][k] = Rational(x[r]);
  }
  size_t row = 0;
  std::vector<size_t> pivot_of_col(k, SIZE_MAX);
  for (size_t col = 0; col < k && row < n; ++col) {
    size_t p = row;
    while (p < n && m[p][col].is_zero()) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    Rational inv = Rational(1) / m[row][col];
    for (size_t j = col; j <= k; ++j) m[row][j] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (size_t j = col; j <= k; ++j) m[r][j] -= f * m[row][j];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  for (size_t r = row; r < n; ++r)
    if (!m[r][k].is_zero()) return std::nullopt;
  QVec c(k, Rational(0));
  for (size_t col = 0; col < k; ++col)
    if (pivot_of_col[col] != SIZE_MAX) c[col] = m[pivot_of_col[col]][k];
  return c;
}

std::optional<IVec> integral_coords(const IMat& basis_rows, const IVec& x) {
  auto q = solve_in_span(basis_rows, x);
  if (!q) return std::nullopt;
  IVec r(q->size());
  for (size_t i = 0; i < q->size(); ++i) {
    if (!(*q)[i].is_integer()) return std::nullopt;
    r[i] = (*q)[i].num().to_i64();
  }
  return r;
}

// Positive roots and coroots via reflection closure, tracked in the
// simple-root / simple-coroot coordinate bases.
void positive_system(const IMat& cartan, IMat& roots_rc, IMat& coroots_cc) {
  int n = static_cast<int>(cartan.size());
  std::set<IVec> seen;
  std::vector<std::pair<IVec, IVec>> queue;
  for (int i = 0; i < n; ++i) {
    IVec r(n, 0), c(n, 0);
    r[i] = 1;
    c[i] = 1;
    queue.emplace_back(r, c);
    seen.insert(r);
  }
  for (size_t q = 0; q < queue.size(); ++q) {
    auto [r, c] = queue[q];
    for (int i = 0; i < n; ++i) {
      // s_i on root coords and the matching coroot coords.
      long long pr = 0, pc = 0;
      for (int j = 0; j < n; ++j) {
        pr += cartan[i][j] * r[j];
        pc += cartan[j][i] * c[j];
      }
      IVec r2 = r, c2 = c;
      r2[i] -= pr;
      c2[i] -= pc;
      if (seen.insert(r2).second) queue.emplace_back(r2, c2);
    }
  }
  roots_rc.clear();
  coroots_cc.clear();
  // Simple ones first, then the rest sorted for determinism.
  std::vector<std::pair<IVec, IVec>> pos;
  for (auto& [r, c] : queue) {
    bool nonneg = std::all_of(r.begin(), r.end(), [](long long v) { return v >= 0; });
    if (!nonneg) continue;
    long long ht = std::accumulate(r.begin(), r.end(), 0LL);
    if (ht == 1) continue;  // simple, added below
    pos.emplace_back(r, c);
  }
  std::sort(pos.begin(), pos.end());
  for (int i = 0; i < n; ++i) {
    IVec r(n, 0), c(n, 0);
    r[i] = 1;
    c[i] = 1;
    roots_rc.push_back(r);
    coroots_cc.push_back(c);
  }
  for (auto& [r, c] : pos) {
    roots_rc.push_back(r);
    coroots_cc.push_back(c);
  }
}

IVec combine(const IMat& basis_rows, const IVec& coeffs) {
  IVec r(basis_rows.empty() ? 0 : basis_rows[0].size(), 0);
  for (size_t i = 0; i < basis_rows.size(); ++i)
    for (size_t j = 0; j < r.size(); ++j) r[j] += coeffs[i] * basis_rows[i][j];
  return r;
}

RootDatum assemble_datum(CartanType type, Form form, IMat simple_roots, IMat simple_coroots) {
  RootDatum d;
  d.type = type;
  d.form = form;
  d.rank_I = static_cast<int>(simple_roots.size());
  d.lattice_rank = d.rank_I ? static_cast<int>(simple_roots[0].size()) : 0;
  d.simple_roots = std::move(simple_roots);
  d.simple_coroots = std::move(simple_coroots);
  d.cartan.assign(d.rank_I, IVec(d.rank_I, 0));
  for (int i = 0; i < d.rank_I; ++i)
    for (int j = 0; j < d.rank_I; ++j)
      d.cartan[i][j] = dot(d.simple_coroots[i], d.simple_roots[j]);

  IMat roots_rc, coroots_cc;
  positive_system(d.cartan, roots_rc, coroots_cc);
  for (size_t k = 0; k < roots_rc.size(); ++k) {
    d.positive_roots.push_back(combine(d.simple_roots, roots_rc[k]));
    d.positive_coroots.push_back(combine(d.simple_coroots, coroots_cc[k]));
  }
  d.rho.assign(d.lattice_rank, Rational(0));
  d.rho_vee.assign(d.lattice_rank, Rational(0));
  for (const auto& b : d.positive_roots)
    for (int k = 0; k < d.lattice_rank; ++k) d.rho[k] += Rational(b[k], 2);
  for (const auto& b : d.positive_coroots)
    for (int k = 0; k < d.lattice_rank; ++k) d.rho_vee[k] += Rational(b[k], 2);

  // <alpha_i^vee, rho> = 1 in any root datum; cheap build-time sanity check.
  for (int i = 0; i < d.rank_I; ++i) {
    Rational p(0);
    for (int k = 0; k < d.lattice_rank; ++k) p += Rational(d.simple_coroots[i][k]) * d.rho[k];
    if (!(p == Rational(1))) throw Error("root datum assembly: rho pairing check failed");
  }

  // Longest Weyl element on X, via the antidominant walk from rho.
  {
    int n = d.lattice_rank;
    IMat w(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) w[i][i] = 1;
    QVec v = d.rho;
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i < d.rank_I; ++i) {
        Rational p(0);
        for (int k = 0; k < n; ++k) p += Rational(d.simple_coroots[i][k]) * v[k];
        if (p.sign() > 0) {
          // v := s_i v ; w := S_i w (reflect each column of w)
          for (int k = 0; k < n; ++k) v[k] -= p * Rational(d.simple_roots[i][k]);
          IMat nw(n, IVec(n, 0));
          for (int cidx = 0; cidx < n; ++cidx) {
            IVec colv(n);
            for (int k = 0; k < n; ++k) colv[k] = w[k][cidx];
            IVec refl = reflect_char(d, i, colv);
            for (int k = 0; k < n; ++k) nw[k][cidx] = refl[k];
          }
          w = std::move(nw);
          moved = true;
        }
      }
    }
    d.w0_on_char = std::move(w);
  }
  return d;
}

}  // namespace

RootDatum build_root_datum(CartanType type, Form form) {
  if (form == Form::gl)
    throw Error("use build_gl_datum for the gl form");
  if (!cartan_type_admissible(type))
    throw Error("inadmissible Cartan type " + type.to_string());
  int n = type.rank;
  IMat a = cartan_matrix(type);
  IMat roots(n, IVec(n, 0)), coroots(n, IVec(n, 0));
  if (form == Form::simply_connected) {
    // X basis: fundamental weights; X^vee basis: simple coroots.
    // alpha_j = sum_i a_ij omega_i.
    for (int i = 0; i < n; ++i) {
      coroots[i][i] = 1;
      for (int j = 0; j < n; ++j) roots[j][i] = a[i][j];
    }
  } else {
    // adjoint: X basis: simple roots; X^vee basis: fundamental coweights.
    for (int i = 0; i < n; ++i) {
      roots[i][i] = 1;
      for (int j = 0; j < n; ++j) coroots[i][j] = a[i][j];  // alpha_i^vee = sum_j a_ij w_j^vee
    }
  }
  return assemble_datum(type, form, roots, coroots);
}

RootDatum build_gl_datum(int m) {
  if (m < 2) throw Error("gl datum requires m >= 2");
  int n = m - 1;
  IMat roots(n, IVec(m, 0)), coroots(n, IVec(m, 0));
  for (int i = 0; i < n; ++i) {
    roots[i][i] = 1;
    roots[i][i + 1] = -1;
    coroots[i][i] = 1;
    coroots[i][i + 1] = -1;
  }
  return assemble_datum(CartanType{Family::A, n}, Form::gl, roots, coroots);
}

RootDatum dual(const RootDatum& d) {
  CartanType t = d.type;
  if (t.family == Family::B) t.family = Family::C;
  else if (t.family == Family::C) t.family = Family::B;
  Form f = d.form;
  if (f == Form::simply_connected) f = Form::adjoint;
  else if (f == Form::adjoint) f = Form::simply_connected;
  return assemble_datum(t, f, d.simple_coroots, d.simple_roots);
}

bool in_root_lattice(const RootDatum& d, const IVec& x) {
  return integral_coords(d.simple_roots, x).has_value();
}

bool in_coroot_lattice(const RootDatum& d, const IVec& v) {
  return integral_coords(d.simple_coroots, v).has_value();
}

std::optional<QVec> root_coordinates(const RootDatum& d, const IVec& x) {
  return solve_in_span(d.simple_roots, x);
}

IMat fundamental_coweights(const RootDatum& d) {
  IMat r;
  if (d.form == Form::gl) {
    for (int i = 0; i < d.rank_I; ++i) {
      IVec w(d.lattice_rank, 0);
      for (int k = 0; k <= i; ++k) w[k] = 1;
      r.push_back(w);
    }
    return r;
  }
  if (d.form == Form::adjoint) {
    for (int i = 0; i < d.rank_I; ++i) {
      IVec w(d.lattice_rank, 0);
      w[i] = 1;
      r.push_back(w);
    }
    return r;
  }
  throw Error("fundamental coweights are not lattice points in the " + form_name(d.form) +
              " form");
}

IVec w0_char(const RootDatum& d, const IVec& x) { return mat_apply(d.w0_on_char, x); }

IVec w0_cochar(const RootDatum& d, const IVec& v) {
  // <w0 v, w0 x> = <v, x> forces the cocharacter matrix to be the transpose.
  IVec r(d.lattice_rank, 0);
  for (int i = 0; i < d.lattice_rank; ++i)
    for (int j = 0; j < d.lattice_rank; ++j) r[i] += d.w0_on_char[j][i] * v[j];
  return r;
}

IVec dual_char(const RootDatum& d, const IVec& x) { return scale(w0_char(d, x), -1); }

IMat integer_kernel(const IMat& m) {
  if (m.empty()) return {};
  size_t rows = m.size(), cols = m[0].size();
  IMat a = m;
  IMat t(cols, IVec(cols, 0));
  for (size_t i = 0; i < cols; ++i) t[i][i] = 1;  // t's ROWS are the candidate columns
  auto col_axpy = [&](size_t dst, size_t src, long long q) {
    for (size_t r = 0; r < rows; ++r) a[r][dst] -= q * a[r][src];
    for (size_t k = 0; k < cols; ++k) t[dst][k] -= q * t[src][k];
  };
  auto col_swap = [&](size_t x, size_t y) {
    for (size_t r = 0; r < rows; ++r) std::swap(a[r][x], a[r][y]);
    std::swap(t[x], t[y]);
  };
  size_t lead = 0;
  for (size_t row = 0; row < rows && lead < cols; ++row) {
    while (true) {
      size_t best = SIZE_MAX;
      for (size_t c = lead; c < cols; ++c) {
        if (a[row][c] == 0) continue;
        if (best == SIZE_MAX || std::llabs(a[row][c]) < std::llabs(a[row][best])) best = c;
      }
      if (best == SIZE_MAX) break;  // all zero, no pivot in this row
      bool reduced_all = true;
      for (size_t c = lead; c < cols; ++c) {
        if (c == best || a[row][c] == 0) continue;
        long long q = a[row][c] / a[row][best];
        col_axpy(c, best, q);
        if (a[row][c] != 0) reduced_all = false;
      }
      if (reduced_all) {
        col_swap(lead, best);
        ++lead;
        break;
      }
    }
  }
  IMat kernel;
  for (size_t c = lead; c < cols; ++c) kernel.push_back(t[c]);
  return kernel;
}

DiagramAutomorphism make_automorphism(const RootDatum& d, const IVec& perm) {
  if (perm.size() != static_cast<size_t>(d.rank_I))
    throw Error("automorphism permutation has wrong length");
  IVec check = perm;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < d.rank_I; ++i)
    if (check[i] != i) throw Error("automorphism is not a permutation of I");

  bool is_id = true;
  for (int i = 0; i < d.rank_I; ++i)
    if (perm[i] != i) is_id = false;

  DiagramAutomorphism s;
  s.perm = perm;
  int n = d.lattice_rank;
  s.on_char.assign(n, IVec(n, 0));
  s.on_cochar.assign(n, IVec(n, 0));
  if (d.form == Form::gl) {
    bool is_flip = true;
    for (int i = 0; i < d.rank_I; ++i)
      if (perm[i] != d.rank_I - 1 - i) is_flip = false;
    if (is_id) {
      for (int i = 0; i < n; ++i) s.on_char[i][i] = s.on_cochar[i][i] = 1;
    } else if (is_flip) {
      for (int i = 0; i < n; ++i) s.on_char[i][n - 1 - i] = s.on_cochar[i][n - 1 - i] = -1;
    } else {
      throw Error("gl form supports only the identity and flip automorphisms");
    }
  } else {
    // Both lattice bases are indexed by I; the permutation acts on indices.
    for (int i = 0; i < n; ++i) {
      s.on_char[perm[i]][i] = 1;
      s.on_cochar[perm[i]][i] = 1;
    }
  }

  // Validate: roots/coroots permute, pairing preserved, order divides 6 and
  // is at most 3.
  for (int i = 0; i < d.rank_I; ++i) {
    if (s.apply_char(d.simple_roots[i]) != d.simple_roots[perm[i]])
      throw Error("automorphism does not permute the simple roots");
    if (s.apply_cochar(d.simple_coroots[i]) != d.simple_coroots[perm[i]])
      throw Error("automorphism does not permute the simple coroots");
  }
  for (int i = 0; i < n; ++i) {
    IVec ei(n, 0);
    ei[i] = 1;
    IVec img_c = s.apply_char(ei);
    for (int j = 0; j < n; ++j) {
      IVec ej(n, 0);
      ej[j] = 1;
      if (dot(s.apply_cochar(ej), img_c) != dot(ej, ei))
        throw Error("automorphism does not preserve the pairing");
    }
  }
  // order of the permutation
  int ord = 1;
  IVec p = perm;
  IVec cur = perm;
  auto is_identity = [&](const IVec& q) {
    for (int i = 0; i < d.rank_I; ++i)
      if (q[i] != i) return false;
    return true;
  };
  while (!is_identity(cur)) {
    IVec nxt(d.rank_I);
    for (int i = 0; i < d.rank_I; ++i) nxt[i] = p[cur[i]];
    cur = nxt;
    ++ord;
    if (ord > 3) throw Error("automorphism order exceeds 3");
  }
  s.order = ord;

  // Orbits, sorted by minimal element.
  std::vector<bool> used(d.rank_I, false);
  for (int i = 0; i < d.rank_I; ++i) {
    if (used[i]) continue;
    IVec orbit;
    int j = i;
    while (!used[j]) {
      used[j] = true;
      orbit.push_back(j);
      j = static_cast<int>(perm[j]);
    }
    std::sort(orbit.begin(), orbit.end());
    s.orbits.push_back(orbit);
  }
  std::sort(s.orbits.begin(), s.orbits.end(),
            [](const IVec& a, const IVec& b) { return a[0] < b[0]; });
  for (const auto& orbit : s.orbits) {
    bool adj = false;
    for (size_t x = 0; x < orbit.size(); ++x)
      for (size_t y = x + 1; y < orbit.size(); ++y) {
        long long a = d.cartan[orbit[x]][orbit[y]];
        if (a == 0) continue;
        if (a == -1 && orbit.size() == 2)
          adj = true;
        else
          throw Error("unsupported orbit adjacency pattern");
      }
    s.orbit_adjacent.push_back(adj);
  }
  return s;
}

DiagramAutomorphism identity_automorphism(const RootDatum& d) {
  IVec p(d.rank_I);
  for (int i = 0; i < d.rank_I; ++i) p[i] = i;
  return make_automorphism(d, p);
}

DiagramAutomorphism flip_automorphism(const RootDatum& d) {
  if (d.type.family != Family::A && d.type.family != Family::D && d.type.family != Family::E)
    throw Error("flip automorphism requires a simply-laced type");
  IVec p(d.rank_I);
  if (d.type.family == Family::A) {
    for (int i = 0; i < d.rank_I; ++i) p[i] = d.rank_I - 1 - i;
  } else if (d.type.family == Family::D) {
    for (int i = 0; i < d.rank_I; ++i) p[i] = i;
    std::swap(p[d.rank_I - 2], p[d.rank_I - 1]);
  } else {
    if (d.type.rank != 6) throw Error("flip automorphism of E requires E6");
    // Bourbaki E6: 1<->6, 3<->5, 2 and 4 fixed (0-based: 0<->5, 2<->4).
    p = {5, 1, 4, 3, 2, 0};
  }
  return make_automorphism(d, p);
}

DiagramAutomorphism triality_automorphism(const RootDatum& d) {
  if (!(d.type.family == Family::D && d.type.rank == 4))
    throw Error("triality requires D4");
  // 0-based: 0 -> 2 -> 3 -> 0, center 1 fixed.
  IVec p = {2, 1, 3, 0};
  return make_automorphism(d, p);
}

bool has_adjacent_orbit(const DiagramAutomorphism& s) {
  for (bool b : s.orbit_adjacent)
    if (b) return true;
  return false;
}

int c_sigma(const DiagramAutomorphism& s) {
  if (s.order == 3) return 3;
  if (s.order == 2) return has_adjacent_orbit(s) ? 4 : 2;
  throw Error("c_sigma requires a nontrivial automorphism");
}

IVec s_map(const RootDatum& d, const DiagramAutomorphism& s, const IVec& lambda) {
  (void)d;
  if (s.order == 2 && !has_adjacent_orbit(s)) {
    return add(lambda, s.apply_cochar(lambda));
  }
  if (s.order == 3) {
    IVec t = s.apply_cochar(lambda);
    return add(add(lambda, t), s.apply_cochar(t));
  }
  if (s.order == 2) {  // adjacent orbit present
    IVec t = add(lambda, s.apply_cochar(lambda));
    return add(t, s.apply_cochar(t));
  }
  throw Error("s_map requires a nontrivial automorphism");
}

namespace {

CartanType folded_type_from_table(const RootDatum& d, const DiagramAutomorphism& s) {
  if (s.order == 1) return d.type;
  if (d.type.family == Family::A && s.order == 2) {
    int r = d.type.rank;
    if (r % 2 == 1) {
      int n = (r + 1) / 2;
      return n >= 2 ? CartanType{Family::B, n} : CartanType{Family::A, 1};
    }
    int n = r / 2;
    return n >= 2 ? CartanType{Family::C, n} : CartanType{Family::A, 1};
  }
  if (d.type.family == Family::D && s.order == 2)
    return CartanType{Family::C, d.type.rank - 1};
  if (d.type.family == Family::D && d.type.rank == 4 && s.order == 3)
    return CartanType{Family::G, 2};
  if (d.type.family == Family::E && d.type.rank == 6 && s.order == 2)
    return CartanType{Family::F, 4};
  throw Error("no folded type for " + d.type.to_string() + " with this automorphism");
}

bool cartan_match_perm(const IMat& a, const IMat& b, IVec& perm, std::vector<bool>& used,
                       size_t pos) {
  size_t n = a.size();
  if (pos == n) return true;
  for (size_t cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (size_t prev = 0; prev <= pos && ok; ++prev) {
      size_t pc = prev == pos ? cand : static_cast<size_t>(perm[prev]);
      if (a[pos][prev] != b[cand][pc] || a[prev][pos] != b[pc][cand]) ok = false;
    }
    if (!ok) continue;
    perm[pos] = static_cast<long long>(cand);
    used[cand] = true;
    if (cartan_match_perm(a, b, perm, used, pos + 1)) return true;
    used[cand] = false;
  }
  return false;
}

bool cartan_isomorphic(const IMat& a, const IMat& b) {
  if (a.size() != b.size()) return false;
  IVec perm(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  return cartan_match_perm(a, b, perm, used, 0);
}

bool spans_lattice(const IMat& rows, int lattice_rank) {
  for (int i = 0; i < lattice_rank; ++i) {
    IVec e(lattice_rank, 0);
    e[i] = 1;
    if (!integral_coords(rows, e)) return false;
  }
  return true;
}

}  // namespace

FoldedDatum fold(const RootDatum& d, const DiagramAutomorphism& s) {
  if (d.form == Form::gl)
    throw Error("folding is not offered for the gl form");
  FoldedDatum f;
  f.orbits = s.orbits;
  f.orbit_adjacent = s.orbit_adjacent;
  for (const auto& o : f.orbits) f.orbit_sizes.push_back(static_cast<long long>(o.size()));

  // Invariant sublattice of X.
  IMat fixed_eq = s.on_char;
  for (int i = 0; i < d.lattice_rank; ++i) fixed_eq[i][i] -= 1;
  f.x_sigma_basis = integer_kernel(fixed_eq);
  size_t k = f.x_sigma_basis.size();

  IMat folded_roots, folded_coroots;
  for (size_t e = 0; e < f.orbits.size(); ++e) {
    IVec a(d.lattice_rank, 0);
    for (long long i : f.orbits[e]) a = add(a, d.simple_roots[i]);
    if (f.orbit_adjacent[e]) a = scale(a, 2);
    f.alpha_eta.push_back(a);
    auto coords = integral_coords(f.x_sigma_basis, a);
    if (!coords) throw Error("fold: alpha_eta is not in the invariant lattice");
    folded_roots.push_back(*coords);

    // theta(alpha_i^vee) for i in the orbit; independent of the choice of i.
    IVec theta0;
    for (size_t oi = 0; oi < f.orbits[e].size(); ++oi) {
      IVec th(k, 0);
      for (size_t b = 0; b < k; ++b)
        th[b] = dot(d.simple_coroots[f.orbits[e][oi]], f.x_sigma_basis[b]);
      if (oi == 0)
        theta0 = th;
      else if (th != theta0)
        throw Error("fold: theta(alpha_i^vee) depends on the orbit representative");
    }
    f.alpha_eta_vee.push_back(theta0);
    folded_coroots.push_back(theta0);
  }

  CartanType ft = folded_type_from_table(d, s);
  Form folded_form;
  {
    // Provisional Cartan for the span checks.
    IMat fc(f.orbits.size(), IVec(f.orbits.size(), 0));
    for (size_t i = 0; i < f.orbits.size(); ++i)
      for (size_t j = 0; j < f.orbits.size(); ++j)
        fc[i][j] = dot(folded_coroots[i], folded_roots[j]);
    if (!cartan_isomorphic(fc, cartan_matrix(ft)))
      throw Error("fold: folded Cartan matrix does not match the expected type " +
                  ft.to_string());
    if (spans_lattice(folded_coroots, static_cast<int>(k)))
      folded_form = Form::simply_connected;
    else if (spans_lattice(folded_roots, static_cast<int>(k)))
      folded_form = Form::adjoint;
    else
      throw Error("fold: folded lattice form is neither simply connected nor adjoint");
  }
  f.folded = assemble_datum(ft, folded_form, folded_roots, folded_coroots);
  return f;
}

IVec fold_char(const FoldedDatum& f, const RootDatum& ambient, const DiagramAutomorphism& s,
               const IVec& x) {
  (void)ambient;
  if (s.apply_char(x) != x) throw Error("fold_char: character is not sigma-invariant");
  auto coords = integral_coords(f.x_sigma_basis, x);
  if (!coords) throw Error("fold_char: character is not in the invariant lattice");
  return *coords;
}

std::vector<IVec> dominant_coweights_up_to(const RootDatum& d, long long maxht) {
  if (d.form == Form::gl)
    throw Error("dominant coweight enumeration by height is for semisimple forms");
  // Dominant coweights have nonnegative coordinates in both lattice bases
  // used here; per-coordinate height increments are positive.
  QVec inc(d.lattice_rank);
  for (int i = 0; i < d.lattice_rank; ++i) {
    IVec e(d.lattice_rank, 0);
    e[i] = 1;
    Rational h(0);
    for (int kk = 0; kk < d.lattice_rank; ++kk) h += Rational(e[kk]) * d.rho[kk];
    inc[i] = h;
  }
  std::vector<IVec> out;
  IVec cur(d.lattice_rank, 0);
  std::function<void(int, Rational)> rec = [&](int pos, Rational used) {
    if (pos == d.lattice_rank) {
      if (is_dominant_coweight(d, cur)) out.push_back(cur);
      return;
    }
    for (long long c = 0;; ++c) {
      Rational u = used + Rational(c) * inc[pos];
      if (Rational(maxht) < u) break;
      cur[pos] = c;
      rec(pos + 1, u);
    }
    cur[pos] = 0;
  };
  rec(0, Rational(0));
  std::sort(out.begin(), out.end(), [&](const IVec& a, const IVec& b) {
    Rational ha = height(d, {a}), hb = height(d, {b});
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

nlohmann::ordered_json datum_to_json(const RootDatum& d) {
  nlohmann::ordered_json j;
  j["family"] = std::string(1, family_letter(d.type.family));
  j["rank"] = d.type.rank;
  j["form"] = form_name(d.form);
  j["lattice_rank"] = d.lattice_rank;
  j["cartan"] = d.cartan;
  j["simple_roots"] = d.simple_roots;
  j["simple_coroots"] = d.simple_coroots;
  j["num_positive_roots"] = d.positive_roots.size();
  return j;
}

nlohmann::ordered_json folded_to_json(const FoldedDatum& f) {
  nlohmann::ordered_json j;
  j["orbits"] = f.orbits;
  j["orbit_sizes"] = f.orbit_sizes;
  std::vector<int> adj;
  for (bool b : f.orbit_adjacent) adj.push_back(b ? 1 : 0);
  j["orbit_adjacent"] = adj;
  j["alpha_eta"] = f.alpha_eta;
  j["alpha_eta_vee"] = f.alpha_eta_vee;
  j["x_sigma_basis"] = f.x_sigma_basis;
  j["folded"] = datum_to_json(f.folded);
  return j;
}

}  // namespace satrop
