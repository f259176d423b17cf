#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

#include "braidmon/words/braid_word.hpp"

namespace braidmon {

// Element of the free group F_d on g_1..g_d, stored freely reduced.
// Letters are signed generator indices (+k is g_k, -k its inverse).
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int rank);
  FreeWord(int rank, std::vector<int> letters);
  FreeWord(int rank, std::initializer_list<int> letters)
      : FreeWord(rank, std::vector<int>(letters)) {}

  static FreeWord Generator(int rank, int k, int exponent = 1);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord Inverse() const;
  FreeWord Power(int exponent) const;
  // Signed count of g_k.
  int ExponentSum(int k) const;
  int TotalExponentSum() const;
  FreeWord CyclicallyReduced() const;
  // Homomorphism g_k -> images[k-1]; the result has the images' rank.
  FreeWord Substitute(const std::vector<FreeWord>& images) const;

  auto operator<=>(const FreeWord&) const = default;

 private:
  int rank_ = 0;
  std::vector<int> letters_;
};

FreeWord operator*(const FreeWord& a, const FreeWord& b);
// u^-1 w u.
FreeWord Conjugate(const FreeWord& w, const FreeWord& u);
// [a,b] = a b a^-1 b^-1.
FreeWord Commutator(const FreeWord& a, const FreeWord& b);

// Right action of B_d on F_d:
//   g_i^{s_j} = g_{i+1} if i == j,  g_i g_{i-1} g_i^-1 if i == j+1,  g_i otherwise,
// extended so that (w^a)^b == w^(a*b).
FreeWord ActOnFree(const FreeWord& w, const BraidWord& b);

}  // namespace braidmon
