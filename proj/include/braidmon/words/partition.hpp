#pragma once

#include <string>
#include <vector>

namespace braidmon {

// Partition of {1..n} into disjoint non-empty blocks. Blocks are kept sorted
// internally and ordered by their smallest element.
class Partition {
 public:
  Partition() = default;
  // Throws InputError unless the blocks partition {1..n}.
  Partition(int n, std::vector<std::vector<int>> blocks);

  // "1,2|3,4" over {1..n}.
  static Partition Parse(const std::string& text, int n);
  static Partition Discrete(int n);
  static Partition Total(int n);

  int size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  // 0-based index of the block containing i.
  int BlockOf(int i) const { return block_of_[i - 1]; }
  std::string ToString() const;

  bool operator==(const Partition&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

}  // namespace braidmon
