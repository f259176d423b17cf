#pragma once

#include <vector>

#include "braidmon/burau/burau.hpp"
#include "braidmon/burau/closure.hpp"
#include "braidmon/monodromy/factorization.hpp"
#include "braidmon/words/partition.hpp"

namespace braidmon {

// The finite image F = phi(B_d) of a specialized Burau representation and
// the image F_A of the mixed subgroup B(A). Elements are referred to by their
// index in the closure order of F.
class FiniteImage {
 public:
  FiniteImage(BurauRepresentation rep, const Partition& blocks, size_t closure_cap = kDefaultClosureCap);

  const BurauRepresentation& representation() const { return rep_; }
  const FiniteMatrixGroup& group() const { return group_; }
  const Partition& blocks() const { return blocks_; }
  // F_A as ascending indices into F.
  const std::vector<int>& subgroup() const { return subgroup_; }

  int Image(const BraidWord& b) const;
  std::vector<int> ImageTuple(const Factorization& f) const;

  int Multiply(int a, int b) const { return group_.Multiply(a, b); }
  int Inverse(int a) const { return inverse_[a]; }
  // f^-1 x f
  int Conjugate(int x, int f) const { return Multiply(Multiply(Inverse(f), x), f); }

 private:
  BurauRepresentation rep_;
  Partition blocks_;
  FiniteMatrixGroup group_;
  std::vector<int> inverse_;
  std::vector<int> subgroup_;
};

// Closure inside F of the images of braid generators; throws
// VerificationError if an image falls outside F.
std::vector<int> SubgroupImage(const FiniteMatrixGroup& group, const std::vector<BraidWord>& gens,
                               const BurauRepresentation& rep);

}  // namespace braidmon
