#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

#include "braidmon/words/permutation.hpp"

namespace braidmon {

// Word in the Artin generators of B_n. A letter is a signed generator index:
// +k is sigma_k, -k is sigma_k^-1, with 1 <= k <= n-1.
//
// Composition convention, used by every module: letters act left to right,
// so in a*b the braid a happens first.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<int> letters);
  BraidWord(int strands, std::initializer_list<int> letters)
      : BraidWord(strands, std::vector<int>(letters)) {}

  static BraidWord Generator(int strands, int k, int sign = 1);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord Inverse() const;
  BraidWord Power(int exponent) const;
  // Cancels adjacent s s^-1 pairs. Not a normal form.
  BraidWord FreelyReduced() const;
  int ExponentSum() const;

  // Syntactic comparison. Use BraidEqual for group equality.
  auto operator<=>(const BraidWord&) const = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

// a then b. Throws InputError on strand mismatch.
BraidWord Compose(const BraidWord& a, const BraidWord& b);
BraidWord operator*(const BraidWord& a, const BraidWord& b);

// c^-1 * b * c, i.e. b^c in exponent notation.
BraidWord Conjugate(const BraidWord& b, const BraidWord& c);

// Underlying permutation: strand starting at position i ends at p(i).
// Permutation(a*b) == Permutation(a).Then(Permutation(b)).
Permutation UnderlyingPermutation(const BraidWord& b);

// Positive half twist Delta_n as the staircase word
// (s1 ... s_{n-1})(s1 ... s_{n-2}) ... (s1).
BraidWord HalfTwist(int n);

// The automorphism sigma_k -> sigma_{n-k} (conjugation by Delta), which
// renumbers strands from the other end.
BraidWord ReverseStrands(const BraidWord& b);

}  // namespace braidmon
