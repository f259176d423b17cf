#pragma once

#include <cstdint>
#include <vector>

#include "braidmon/burau/laurent.hpp"
#include "braidmon/burau/mod_matrix.hpp"
#include "braidmon/words/braid_word.hpp"

namespace braidmon {

// Reduced Burau representation of B_n on Z[t^{+-1}]^{n-1}.
//
// Convention: the unreduced matrix of s_i acts on column vectors as the block
// [[1-t, t], [1, 0]] on e_i, e_{i+1}; it fixes e_1 + ... + e_n, and the
// reduced matrix is the induced action on the quotient in the basis of the
// images of e_2, ..., e_n. So s_1 has first column (-t, ..., -t) and is the
// identity elsewhere, and s_i (i >= 2) is the block [[1-t, t], [1, 0]] at
// rows and columns i-1, i. A word maps to the left-to-right product of its
// letter matrices. At Z/4, t = 3, n = 4 this gives
//   s1 -> [[1,0,0],[1,1,0],[1,0,1]], s2 -> [[2,3,0],[1,0,0],[0,0,1]],
//   s3 -> [[1,0,0],[0,2,3],[0,1,0]].
std::vector<LaurentMatrix> ReducedBurau(int n);
std::vector<LaurentMatrix> ReducedBurauInverses(int n);
LaurentMatrix ApplyBurau(const BraidWord& b);

// Letter-wise specialization t -> s in Z/m; s must be a unit.
std::vector<ModMatrix> Specialize(const std::vector<LaurentMatrix>& mats, std::int64_t modulus,
                                  std::int64_t s);

// Burau specialized to Z/m at t = s. With reverse_strands, words are first
// relabeled s_i -> s_{n-i} (conjugation by the half twist).
class BurauRepresentation {
 public:
  BurauRepresentation(int strands, std::int64_t modulus, std::int64_t t, bool reverse_strands = false);

  int strands() const { return strands_; }
  std::int64_t modulus() const { return modulus_; }
  std::int64_t t() const { return t_; }
  bool reverse_strands() const { return reverse_; }
  const std::vector<ModMatrix>& generators() const { return gens_; }
  const std::vector<ModMatrix>& inverses() const { return inverses_; }

  ModMatrix Apply(const BraidWord& b) const;

 private:
  int strands_;
  std::int64_t modulus_;
  std::int64_t t_;
  bool reverse_;
  std::vector<ModMatrix> gens_;
  std::vector<ModMatrix> inverses_;
};

}  // namespace braidmon
