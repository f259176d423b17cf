#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "braidmon/burau/mod_matrix.hpp"
#include "braidmon/fpgroups/finite_group.hpp"

namespace braidmon {

// Finite group of matrices in breadth-first order from the identity (index 0);
// each layer is sorted lexicographically by entries.
class FiniteMatrixGroup {
 public:
  const std::vector<ModMatrix>& elements() const { return elements_; }
  size_t order() const { return elements_.size(); }
  const ModMatrix& operator[](size_t i) const { return elements_[i]; }
  // -1 when m is not an element.
  int IndexOf(const ModMatrix& m) const;
  bool Contains(const ModMatrix& m) const { return IndexOf(m) >= 0; }
  // Positions of the closure generators (first occurrence).
  const std::vector<int>& generator_indices() const { return generator_indices_; }
  // Number of BFS layers (word-length radius + 1).
  int layers() const { return layers_; }

  int Multiply(int a, int b) const;
  int Inverse(int a) const;

  FiniteGroupTable ToGroupTable(const std::string& name) const;

 private:
  friend FiniteMatrixGroup Closure(const std::vector<ModMatrix>&, size_t);
  std::vector<ModMatrix> elements_;
  std::unordered_map<ModMatrix, int, ModMatrixHash> index_;
  std::vector<int> generator_indices_;
  int layers_ = 0;
};

inline constexpr size_t kDefaultClosureCap = 1'000'000;

// Closure under multiplication by the generators and their inverses. Throws
// InputError for a non-invertible or mismatched generator and BudgetExceeded
// past `cap` elements.
FiniteMatrixGroup Closure(const std::vector<ModMatrix>& gens, size_t cap = kDefaultClosureCap);

}  // namespace braidmon
