#pragma once

#include "weyl.hpp"

namespace satrop {

// A tropical point of U_* in the Lusztig chart of a reduced word for w0:
// integer coordinates, one per letter. Coordinates may be negative.
struct TropLusztigData {
  IVec word;
  IVec coords;
};

// Tropicalized braid move. Commutation swaps the two coordinates; the
// short-braid window (a, b, c) becomes
//   (b + c - min(a,c), min(a,c), a + b - min(a,c)).
TropLusztigData apply_move(const RootDatum& d, const TropLusztigData& l, const BraidMove& mv);

// Rewrite coordinates in the chart of target_word via a braid path.
TropLusztigData transport(const RootDatum& d, const TropLusztigData& l, const IVec& target_word);

// Everything sigma-related works in the standardized inflated chart.
struct PLContext {
  RootDatum datum;
  DiagramAutomorphism sigma;
  FoldedWords words;
  std::vector<BraidMove> sigma_path;  // braid path from sigma(word) back to word

  const IVec& word() const { return words.inflated_word; }
};

PLContext make_pl_context(const RootDatum& d, const DiagramAutomorphism& s);

// sigma^t on U_*(Z^t): relabel the chart word by sigma, then transport back.
IVec sigma_trop_U(const PLContext& ctx, const IVec& coords);

// sigma^t-fixed iff constant on each block of the inflated word.
bool is_sigma_fixed(const PLContext& ctx, const IVec& coords);

// The summation S_i(l): coordinatewise sums in the standardized chart,
// case split on the order of sigma and the adjacent-orbit case. The result
// is always sigma^t-fixed.
IVec s_sum_U(const PLContext& ctx, const IVec& coords);

// Collapse a block-constant coordinate vector to one value per folded
// letter; errors when the blocks are not constant.
IVec collapse_blocks(const PLContext& ctx, const IVec& coords);
// Expand folded-letter values to the inflated chart.
IVec expand_blocks(const PLContext& ctx, const IVec& folded_coords);

}  // namespace satrop
