#include "weyl.hpp"

#include <map>
#include <queue>
#include <set>

namespace satrop {

IVec word_apply_char(const RootDatum& d, const IVec& word, const IVec& x) {
  IVec v = x;
  for (size_t k = word.size(); k-- > 0;) v = reflect_char(d, static_cast<int>(word[k]), v);
  return v;
}

long long weyl_length(const RootDatum& d, const IVec& word) {
  std::set<IVec> negatives;
  for (const auto& b : d.positive_roots) negatives.insert(scale(b, -1));
  long long len = 0;
  for (const auto& b : d.positive_roots) {
    IVec img = word_apply_char(d, word, b);
    if (negatives.count(img)) ++len;
  }
  return len;
}

bool is_reduced(const RootDatum& d, const IVec& word) {
  return weyl_length(d, word) == static_cast<long long>(word.size());
}

namespace {

IMat reflection_matrix_char(const RootDatum& d, int i) {
  int n = d.lattice_rank;
  IMat m(n, IVec(n, 0));
  for (int c = 0; c < n; ++c) {
    IVec e(n, 0);
    e[c] = 1;
    IVec r = reflect_char(d, i, e);
    for (int k = 0; k < n; ++k) m[k][c] = r[k];
  }
  return m;
}

IMat mat_mul_int(const IMat& a, const IMat& b) {
  size_t n = a.size(), p = b[0].size(), m = b.size();
  IMat r(n, IVec(p, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < m; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < p; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

// Is x a negative root? Tested via root-basis coordinates.
bool is_negative_root(const RootDatum& d, const IVec& x) {
  auto c = root_coordinates(d, x);
  if (!c) return false;
  bool nonpos = true, nonzero = false;
  for (const auto& q : *c) {
    if (q.sign() > 0) nonpos = false;
    if (!q.is_zero()) nonzero = true;
  }
  return nonpos && nonzero;
}

}  // namespace

IVec longest_word(const RootDatum& d) {
  long long target = static_cast<long long>(d.positive_roots.size());
  IVec word;
  IMat m = d.w0_on_char;  // w_remaining^{-1}, starting from w0^{-1} = w0
  std::vector<IMat> refl;
  for (int i = 0; i < d.rank_I; ++i) refl.push_back(reflection_matrix_char(d, i));
  for (long long step = 0; step < target; ++step) {
    bool found = false;
    for (int i = 0; i < d.rank_I && !found; ++i) {
      IVec img = mat_apply(m, d.simple_roots[i]);
      if (is_negative_root(d, img)) {
        word.push_back(i);
        m = mat_mul_int(m, refl[i]);
        found = true;
      }
    }
    if (!found) throw Error("longest_word: no descent found (corrupt datum)");
  }
  return word;
}

std::vector<BraidMove> available_moves(const RootDatum& d, const IVec& word) {
  std::vector<BraidMove> out;
  int n = static_cast<int>(word.size());
  for (int p = 0; p + 1 < n; ++p) {
    int a = static_cast<int>(word[p]), b = static_cast<int>(word[p + 1]);
    if (a != b && d.cartan[a][b] == 0)
      out.push_back({BraidMove::Kind::commutation, p});
  }
  for (int p = 0; p + 2 < n; ++p) {
    int a = static_cast<int>(word[p]), b = static_cast<int>(word[p + 1]);
    if (word[p + 2] == word[p] && a != b && d.cartan[a][b] == -1 && d.cartan[b][a] == -1)
      out.push_back({BraidMove::Kind::short_braid, p});
  }
  return out;
}

IVec apply_move_to_word(const RootDatum& d, const IVec& word, const BraidMove& mv) {
  (void)d;
  IVec w = word;
  if (mv.kind == BraidMove::Kind::commutation) {
    if (mv.pos + 1 >= static_cast<int>(w.size())) throw Error("braid move out of range");
    std::swap(w[mv.pos], w[mv.pos + 1]);
  } else {
    if (mv.pos + 2 >= static_cast<int>(w.size())) throw Error("braid move out of range");
    std::swap(w[mv.pos], w[mv.pos + 1]);
    w[mv.pos + 2] = w[mv.pos];
  }
  return w;
}

std::vector<BraidMove> braid_path(const RootDatum& d, const IVec& w1, const IVec& w2) {
  for (int i = 0; i < d.rank_I; ++i)
    for (int j = 0; j < d.rank_I; ++j)
      if (i != j && d.cartan[i][j] < -1)
        throw Error("braid_path requires a simply-laced ambient type");
  if (w1.size() != w2.size()) throw Error("braid_path: words have different lengths");
  if (!is_reduced(d, w1) || !is_reduced(d, w2)) throw Error("braid_path: word is not reduced");
  // Same element iff equal action on a basis; cheap matrix compare.
  {
    IMat m1(d.lattice_rank), m2(d.lattice_rank);
    for (int c = 0; c < d.lattice_rank; ++c) {
      IVec e(d.lattice_rank, 0);
      e[c] = 1;
      m1[c] = word_apply_char(d, w1, e);
      m2[c] = word_apply_char(d, w2, e);
    }
    if (m1 != m2) throw Error("braid_path: words do not represent the same element");
  }
  if (w1 == w2) return {};
  std::map<IVec, std::pair<IVec, BraidMove>> parent;  // word -> (prev word, move)
  std::queue<IVec> q;
  q.push(w1);
  parent[w1] = {w1, BraidMove{BraidMove::Kind::commutation, -1}};
  while (!q.empty()) {
    IVec cur = q.front();
    q.pop();
    for (const auto& mv : available_moves(d, cur)) {
      IVec nxt = apply_move_to_word(d, cur, mv);
      if (parent.count(nxt)) continue;
      parent[nxt] = {cur, mv};
      if (nxt == w2) {
        std::vector<BraidMove> path;
        IVec at = w2;
        while (at != w1) {
          auto& [prev, step] = parent[at];
          path.push_back(step);
          at = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push(nxt);
    }
  }
  throw Error("braid_path: no path found (word graph disconnected?)");
}

IVec inflate_folded_word(const RootDatum& d, const DiagramAutomorphism& s,
                         const IVec& folded_word) {
  IVec out;
  for (long long e : folded_word) {
    if (e < 0 || e >= static_cast<long long>(s.orbits.size()))
      throw Error("inflate_folded_word: orbit index out of range");
    const IVec& orbit = s.orbits[e];
    if (s.orbit_adjacent[e]) {
      out.push_back(orbit[0]);
      out.push_back(orbit[1]);
      out.push_back(orbit[0]);
    } else {
      for (long long i : orbit) out.push_back(i);
    }
  }
  if (!is_reduced(d, out)) throw Error("inflate_folded_word: inflated word is not reduced");
  return out;
}

FoldedWords standardized_words(const RootDatum& d, const DiagramAutomorphism& s) {
  FoldedWords fw;
  RootDatum weyl_datum;
  if (d.form == Form::gl) {
    // The W^sigma combinatorics of GL_m agrees with that of SL_m.
    RootDatum sc = build_root_datum(CartanType{Family::A, d.rank_I}, Form::simply_connected);
    DiagramAutomorphism s2 = make_automorphism(sc, s.perm);
    weyl_datum = fold(sc, s2).folded;
  } else {
    weyl_datum = fold(d, s).folded;
  }
  fw.folded_word = longest_word(weyl_datum);
  fw.inflated_word = inflate_folded_word(d, s, fw.folded_word);
  int off = 0;
  for (long long e : fw.folded_word) {
    int len = s.orbit_adjacent[e] ? 3 : static_cast<int>(s.orbits[e].size());
    fw.blocks.emplace_back(off, len);
    off += len;
  }
  return fw;
}

}  // namespace satrop
