#include "plmoves.hpp"

#include <algorithm>

namespace satrop {

TropLusztigData apply_move(const RootDatum& d, const TropLusztigData& l, const BraidMove& mv) {
  TropLusztigData r;
  r.word = apply_move_to_word(d, l.word, mv);
  r.coords = l.coords;
  if (mv.kind == BraidMove::Kind::commutation) {
    std::swap(r.coords[mv.pos], r.coords[mv.pos + 1]);
  } else {
    long long a = l.coords[mv.pos], b = l.coords[mv.pos + 1], c = l.coords[mv.pos + 2];
    long long mn = std::min(a, c);
    r.coords[mv.pos] = b + c - mn;
    r.coords[mv.pos + 1] = mn;
    r.coords[mv.pos + 2] = a + b - mn;
  }
  return r;
}

TropLusztigData transport(const RootDatum& d, const TropLusztigData& l, const IVec& target_word) {
  if (l.word.size() != l.coords.size()) throw Error("transport: coordinate length mismatch");
  if (l.word == target_word) return l;
  auto path = braid_path(d, l.word, target_word);
  TropLusztigData cur = l;
  for (const auto& mv : path) cur = apply_move(d, cur, mv);
  return cur;
}

PLContext make_pl_context(const RootDatum& d, const DiagramAutomorphism& s) {
  PLContext ctx;
  ctx.datum = d;
  ctx.sigma = s;
  ctx.words = standardized_words(d, s);
  IVec relabeled(ctx.words.inflated_word.size());
  for (size_t k = 0; k < relabeled.size(); ++k)
    relabeled[k] = s.perm[ctx.words.inflated_word[k]];
  if (relabeled != ctx.words.inflated_word)
    ctx.sigma_path = braid_path(d, relabeled, ctx.words.inflated_word);
  return ctx;
}

IVec sigma_trop_U(const PLContext& ctx, const IVec& coords) {
  if (coords.size() != ctx.word().size()) throw Error("sigma_trop_U: coordinate length mismatch");
  TropLusztigData cur;
  cur.word.resize(coords.size());
  for (size_t k = 0; k < coords.size(); ++k)
    cur.word[k] = ctx.sigma.perm[ctx.word()[k]];
  cur.coords = coords;
  for (const auto& mv : ctx.sigma_path) cur = apply_move(ctx.datum, cur, mv);
  return cur.coords;
}

bool is_sigma_fixed(const PLContext& ctx, const IVec& coords) {
  if (coords.size() != ctx.word().size())
    throw Error("is_sigma_fixed: coordinates are not in the inflated chart");
  for (const auto& [off, len] : ctx.words.blocks)
    for (int k = 1; k < len; ++k)
      if (coords[off + k] != coords[off]) return false;
  return true;
}

IVec s_sum_U(const PLContext& ctx, const IVec& coords) {
  auto plus = [](const IVec& a, const IVec& b) { return add(a, b); };
  if (ctx.sigma.order == 2 && !has_adjacent_orbit(ctx.sigma)) {
    return plus(coords, sigma_trop_U(ctx, coords));
  }
  if (ctx.sigma.order == 3) {
    IVec t1 = sigma_trop_U(ctx, coords);
    IVec t2 = sigma_trop_U(ctx, t1);
    return plus(plus(coords, t1), t2);
  }
  if (ctx.sigma.order == 2) {
    IVec u = plus(coords, sigma_trop_U(ctx, coords));
    return plus(u, sigma_trop_U(ctx, u));
  }
  throw Error("s_sum_U requires a nontrivial automorphism");
}

IVec collapse_blocks(const PLContext& ctx, const IVec& coords) {
  if (!is_sigma_fixed(ctx, coords))
    throw Error("collapse_blocks: coordinates are not block-constant");
  IVec out;
  for (const auto& [off, len] : ctx.words.blocks) {
    (void)len;
    out.push_back(coords[off]);
  }
  return out;
}

IVec expand_blocks(const PLContext& ctx, const IVec& folded_coords) {
  if (folded_coords.size() != ctx.words.blocks.size())
    throw Error("expand_blocks: wrong folded length");
  IVec out(ctx.word().size());
  for (size_t e = 0; e < ctx.words.blocks.size(); ++e) {
    auto [off, len] = ctx.words.blocks[e];
    for (int k = 0; k < len; ++k) out[off + k] = folded_coords[e];
  }
  return out;
}

}  // namespace satrop
