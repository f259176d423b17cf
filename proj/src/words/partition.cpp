#include "braidmon/words/partition.hpp"

#include <algorithm>
#include <sstream>

#include "braidmon/error.hpp"

namespace braidmon {

Partition::Partition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)), block_of_(n, -1) {
  if (n < 1) throw InputError("partition ground set must be non-empty");
  for (auto& b : blocks_) {
    if (b.empty()) throw InputError("partition blocks must be non-empty");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (size_t bi = 0; bi < blocks_.size(); ++bi) {
    for (int i : blocks_[bi]) {
      if (i < 1 || i > n) throw InputError("partition element " + std::to_string(i) + " out of range");
      if (block_of_[i - 1] != -1) throw InputError("partition element " + std::to_string(i) + " repeated");
      block_of_[i - 1] = static_cast<int>(bi);
    }
  }
  for (int i = 0; i < n; ++i)
    if (block_of_[i] == -1) throw InputError("partition misses element " + std::to_string(i + 1));
}

Partition Partition::Parse(const std::string& text, int n) {
  std::vector<std::vector<int>> blocks;
  std::stringstream blocks_in(text);
  std::string block;
  while (std::getline(blocks_in, block, '|')) {
    std::vector<int> items;
    std::stringstream items_in(block);
    std::string item;
    while (std::getline(items_in, item, ',')) {
      const auto first = item.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      try {
        size_t used = 0;
        items.push_back(std::stoi(item.substr(first), &used));
        if (item.find_first_not_of(" \t", first + used) != std::string::npos)
          throw InputError("bad partition item '" + item + "'");
      } catch (const std::logic_error&) {
        throw InputError("bad partition item '" + item + "'");
      }
    }
    blocks.push_back(std::move(items));
  }
  return Partition(n, std::move(blocks));
}

Partition Partition::Discrete(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return Partition(n, std::move(blocks));
}

Partition Partition::Total(int n) {
  std::vector<int> all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  return Partition(n, {all});
}

std::string Partition::ToString() const {
  std::string out;
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += '|';
    for (size_t k = 0; k < blocks_[b].size(); ++k) {
      if (k) out += ',';
      out += std::to_string(blocks_[b][k]);
    }
  }
  return out;
}

}  // namespace braidmon
