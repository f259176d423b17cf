#include "braidmon/equivalence/representation.hpp"

#include <algorithm>

#include "braidmon/error.hpp"
#include "braidmon/words/mixed.hpp"

namespace braidmon {

std::vector<int> SubgroupImage(const FiniteMatrixGroup& group, const std::vector<BraidWord>& gens,
                               const BurauRepresentation& rep) {
  std::vector<int> images;
  for (const auto& g : gens) {
    const int i = group.IndexOf(rep.Apply(g));
    if (i < 0) throw VerificationError("subgroup generator image lies outside the group");
    images.push_back(i);
  }
  std::vector<char> seen(group.order(), 0);
  std::vector<int> members{0}, frontier{0};
  seen[0] = 1;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : images) {
        const int y = group.Multiply(x, g);
        if (!seen[y]) {
          seen[y] = 1;
          members.push_back(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::sort(members.begin(), members.end());
  return members;
}

FiniteImage::FiniteImage(BurauRepresentation rep, const Partition& blocks, size_t closure_cap)
    : rep_(std::move(rep)), blocks_(blocks), group_(Closure(rep_.generators(), closure_cap)) {
  if (blocks.size() != rep_.strands()) throw InputError("partition size does not match the strand count");
  // Powers of each element give its inverse; reuse them across the table.
  inverse_.assign(group_.order(), -1);
  for (size_t a = 0; a < group_.order(); ++a) {
    if (inverse_[a] >= 0) continue;
    inverse_[a] = group_.Inverse(static_cast<int>(a));
    inverse_[inverse_[a]] = static_cast<int>(a);
  }
  subgroup_ = SubgroupImage(group_, MixedSubgroupGenerators(rep_.strands(), blocks), rep_);
}

int FiniteImage::Image(const BraidWord& b) const {
  const int i = group_.IndexOf(rep_.Apply(b));
  if (i < 0) throw VerificationError("braid image lies outside the closure");
  return i;
}

std::vector<int> FiniteImage::ImageTuple(const Factorization& f) const {
  std::vector<int> out;
  for (const auto& e : f.entries()) out.push_back(Image(e.tau));
  return out;
}

}  // namespace braidmon
