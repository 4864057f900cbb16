#pragma once

#include "rootdata.hpp"

namespace satrop {

// Words are sequences of simple-reflection indices (0-based) representing
// w = s_{i1} s_{i2} ... s_{ik}.

struct BraidMove {
  enum class Kind { commutation, short_braid };
  Kind kind;
  int pos;  // index of the first letter of the affected window

  bool operator==(const BraidMove& o) const { return kind == o.kind && pos == o.pos; }
};

// Action of the word's element on a character vector.
IVec word_apply_char(const RootDatum& d, const IVec& word, const IVec& x);
// Coxeter length of the represented element.
long long weyl_length(const RootDatum& d, const IVec& word);
bool is_reduced(const RootDatum& d, const IVec& word);

// Lexicographically minimal reduced word for the longest element.
IVec longest_word(const RootDatum& d);

std::vector<BraidMove> available_moves(const RootDatum& d, const IVec& word);
IVec apply_move_to_word(const RootDatum& d, const IVec& word, const BraidMove& mv);

// Shortest sequence of moves turning w1 into w2 (BFS over the reduced-word
// graph). Requires a simply-laced datum and both words reduced for the same
// element.
std::vector<BraidMove> braid_path(const RootDatum& d, const IVec& w1, const IVec& w2);

// Inflation of a reduced word of w0 in W^sigma to a reduced word of w0 in W.
// Orbit letters expand to ascending orbit elements, or (i, j, i) for the
// adjacent pair {i, j}, i < j.
IVec inflate_folded_word(const RootDatum& d, const DiagramAutomorphism& s, const IVec& folded_word);

// The standardized charts attached to (datum, sigma): the lexicographically
// minimal reduced word of w0 in W^sigma, its inflation, and the block layout
// of the inflated word.
struct FoldedWords {
  IVec folded_word;    // orbit indices into sigma.orbits
  IVec inflated_word;  // reduced word of w0 in W
  std::vector<std::pair<int, int>> blocks;  // (offset, length) per folded letter
};

FoldedWords standardized_words(const RootDatum& d, const DiagramAutomorphism& s);

}  // namespace satrop
