#pragma once

#include <compare>
#include <vector>

#include "braidmon/words/braid_word.hpp"

namespace braidmon {

// Left normal form Delta^p * A_1 * ... * A_m: each A_i is a permutation braid
// other than 1 and Delta, and every adjacent pair is left-weighted.
// A permutation braid is stored as 0-based final positions of the strands.
struct GarsideNormalForm {
  int strands = 1;
  int delta_power = 0;
  std::vector<std::vector<int>> factors;

  // Word realizing the normal form (Delta^p as staircase words, then each
  // factor as a positive word).
  BraidWord ToWord() const;

  auto operator<=>(const GarsideNormalForm&) const = default;
};

GarsideNormalForm ComputeGarsideNormalForm(const BraidWord& b);

// Word problem in B_n.
bool BraidEqual(const BraidWord& a, const BraidWord& b);

// True iff b equals Delta^(2k) for some k >= 0; sets *k.
bool IsFullTwistPower(const BraidWord& b, int* k);

}  // namespace braidmon
