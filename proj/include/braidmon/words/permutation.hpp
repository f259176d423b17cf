#pragma once

#include <compare>
#include <string>
#include <vector>

namespace braidmon {

// Bijection of {1..n}. The 1-based API mirrors strand numbering.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);
  // images[i-1] is the image of i; throws InputError unless a bijection.
  static Permutation FromImages(std::vector<int> images);
  static Permutation Transposition(int n, int i, int j);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  // Apply *this first, then `next`.
  Permutation Then(const Permutation& next) const;
  Permutation Inverse() const;
  bool IsIdentity() const;

  // Non-trivial cycles, each starting at its smallest point.
  std::vector<std::vector<int>> Cycles() const;
  // Sorted lengths of the non-trivial cycles, e.g. {3, 3}.
  std::vector<int> CycleType() const;
  std::string ToCycleString() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace braidmon
