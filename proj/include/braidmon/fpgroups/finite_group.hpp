#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "braidmon/words/free_word.hpp"
#include "braidmon/words/permutation.hpp"

namespace braidmon {

// A finite group given by its multiplication table on elements 0..n-1.
class FiniteGroupTable {
 public:
  FiniteGroupTable() = default;
  // Validates closure, identity, inverses, and associativity (exhaustive up to
  // order 64, sampled beyond).
  FiniteGroupTable(std::string name, std::vector<std::vector<int>> table,
                   std::vector<std::string> labels = {});

  // Group generated by the permutations; elements sorted by image list, so
  // the identity has index 0. Labels are cycle strings.
  static FiniteGroupTable FromPermutations(std::string name, const std::vector<Permutation>& gens);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return identity_; }
  int Multiply(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
  int Inverse(int a) const { return inverse_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string Label(int a) const;

  // Image of w when generator k is sent to images[k-1].
  int Evaluate(const FreeWord& w, const std::vector<int>& images) const;
  std::vector<std::vector<int>> Table() const;

 private:
  std::string name_;
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
};

// S3, S4, D4, Q8, A4 and Z<n> / Z/<n> for 1 <= n <= 12.
FiniteGroupTable BuiltinGroup(const std::string& name);
std::vector<std::string> BuiltinGroupNames();

// {"name", "order", "identity", "table": [[...]], "labels"?}
nlohmann::json FiniteGroupTableToJson(const FiniteGroupTable& g);
FiniteGroupTable FiniteGroupTableFromJson(const nlohmann::json& j);

}  // namespace braidmon
