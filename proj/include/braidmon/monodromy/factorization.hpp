#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "braidmon/error.hpp"
#include "braidmon/words/braid_word.hpp"

namespace braidmon {

// One braid of a monodromy factorization, optionally with its local
// decomposition tau = alpha^-1 * beta * alpha.
struct FactorizationEntry {
  BraidWord tau;
  std::optional<BraidWord> alpha;
  std::optional<BraidWord> beta;
};

// Strands [first, last] touched by a word (1-based, inclusive).
struct StrandWindow {
  int first = 0;
  int last = 0;
};

StrandWindow LocalWindow(const BraidWord& beta);

class Factorization {
 public:
  Factorization() = default;
  // Validates strand counts and, where a decomposition is present, that
  // alpha^-1 beta alpha equals tau in B_d.
  Factorization(int strands, std::vector<FactorizationEntry> entries);
  static Factorization FromTaus(int strands, const std::vector<BraidWord>& taus);

  int strands() const { return strands_; }
  size_t size() const { return entries_.size(); }
  const std::vector<FactorizationEntry>& entries() const { return entries_; }
  const FactorizationEntry& operator[](size_t i) const { return entries_[i]; }
  std::vector<BraidWord> Taus() const;
  bool HasDecomposition() const;

  // tau_r * ... * tau_1.
  BraidWord DescendingProduct() const;

 private:
  int strands_ = 1;
  std::vector<FactorizationEntry> entries_;
};

// Every entry conjugated by c: tau -> c^-1 tau c, alpha -> alpha c.
Factorization ConjugateFactorization(const Factorization& f, const BraidWord& c);

struct FullTwistResult {
  bool holds = false;
  // Power of Delta^2 matched, valid when holds.
  int k = 0;
};

// Checks completion * (tau_r ... tau_1) == Delta^(2k), with k read off the
// exponent sum.
FullTwistResult FullTwistCheck(const Factorization& f, const BraidWord& completion);

// Hurwitz move on a tuple over any group. For sign +1 positions (i, i+1)
// become (g_{i+1}, g_{i+1} g_i g_{i+1}^-1); sign -1 is the inverse move.
// `Ops` supplies Multiply(a, b) and Inverse(a).
template <typename T, typename Ops>
std::vector<T> HurwitzMove(std::vector<T> tuple, int i, int sign, const Ops& ops) {
  if (i < 1 || i >= static_cast<int>(tuple.size()))
    throw InputError("Hurwitz move index " + std::to_string(i) + " out of range");
  T& left = tuple[i - 1];
  T& right = tuple[i];
  if (sign > 0) {
    T conj = ops.Multiply(ops.Multiply(right, left), ops.Inverse(right));
    left = std::move(right);
    right = std::move(conj);
  } else {
    T conj = ops.Multiply(ops.Multiply(ops.Inverse(left), right), left);
    right = std::move(left);
    left = std::move(conj);
  }
  return tuple;
}

// Right action of a braid in B_r on r-tuples: letters applied left to right.
template <typename T, typename Ops>
std::vector<T> ApplyHurwitzBraid(std::vector<T> tuple, const BraidWord& move, const Ops& ops) {
  if (move.strands() != static_cast<int>(tuple.size()))
    throw InputError("Hurwitz braid has " + std::to_string(move.strands()) +
                     " strands but the tuple has " + std::to_string(tuple.size()) + " entries");
  for (int l : move.letters()) tuple = HurwitzMove(std::move(tuple), l > 0 ? l : -l, l > 0 ? 1 : -1, ops);
  return tuple;
}

struct BraidGroupOps {
  BraidWord Multiply(const BraidWord& a, const BraidWord& b) const { return (a * b).FreelyReduced(); }
  BraidWord Inverse(const BraidWord& a) const { return a.Inverse(); }
};

// {"strands": d, "entries": [{"tau": w, "alpha": w|null, "beta": w|null}]}
nlohmann::json FactorizationToJson(const Factorization& f);
Factorization FactorizationFromJson(const nlohmann::json& j);

}  // namespace braidmon
