#include "braidmon/words/mixed.hpp"

#include <map>

#include "braidmon/error.hpp"

namespace braidmon {

bool IsInMixed(const BraidWord& b, const Partition& blocks) {
  if (blocks.size() != b.strands()) throw InputError("partition size does not match strand count");
  const Permutation p = UnderlyingPermutation(b);
  for (int i = 1; i <= b.strands(); ++i)
    if (blocks.BlockOf(p(i)) != blocks.BlockOf(i)) return false;
  return true;
}

std::vector<BraidWord> MixedSubgroupGenerators(int n, const Partition& blocks) {
  if (blocks.size() != n) throw InputError("partition size does not match strand count");
  // A right coset B(A)*u is determined by which block the strand ending at
  // each position came from.
  using Key = std::vector<int>;
  Key start(n);
  for (int i = 1; i <= n; ++i) start[i - 1] = blocks.BlockOf(i);

  std::map<Key, size_t> index;
  std::vector<Key> keys{start};
  std::vector<BraidWord> reps{BraidWord(n)};
  index.emplace(start, 0);
  // tree[c][k] marks the BFS edge used to discover a coset.
  std::vector<std::vector<bool>> tree_edge(1, std::vector<bool>(n, false));

  for (size_t c = 0; c < keys.size(); ++c) {
    for (int k = 1; k < n; ++k) {
      Key next = keys[c];
      std::swap(next[k - 1], next[k]);
      if (index.emplace(next, keys.size()).second) {
        keys.push_back(next);
        reps.push_back(reps[c] * BraidWord::Generator(n, k));
        tree_edge[c][k] = true;
        tree_edge.emplace_back(n, false);
      }
    }
  }

  std::vector<BraidWord> gens;
  for (size_t c = 0; c < keys.size(); ++c) {
    for (int k = 1; k < n; ++k) {
      if (tree_edge[c][k]) continue;
      Key next = keys[c];
      std::swap(next[k - 1], next[k]);
      const BraidWord& target = reps[index.at(next)];
      BraidWord g = (reps[c] * BraidWord::Generator(n, k) * target.Inverse()).FreelyReduced();
      if (!g.empty()) gens.push_back(std::move(g));
    }
  }
  return gens;
}

}  // namespace braidmon
