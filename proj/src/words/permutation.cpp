#include "braidmon/words/permutation.hpp"

#include <algorithm>

#include "braidmon/error.hpp"

namespace braidmon {

Permutation::Permutation(int n) : images_(n) {
  if (n < 0) throw InputError("permutation size must be non-negative");
  for (int i = 0; i < n; ++i) images_[i] = i + 1;
}

Permutation Permutation::FromImages(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v]) throw InputError("permutation images are not a bijection");
    seen[v] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::Transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) throw InputError("transposition point out of range");
  Permutation p(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

Permutation Permutation::Then(const Permutation& next) const {
  if (next.size() != size()) throw InputError("permutation size mismatch");
  Permutation p(size());
  for (int i = 0; i < size(); ++i) p.images_[i] = next.images_[images_[i] - 1];
  return p;
}

Permutation Permutation::Inverse() const {
  Permutation p(size());
  for (int i = 0; i < size(); ++i) p.images_[images_[i] - 1] = i + 1;
  return p;
}

bool Permutation::IsIdentity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::Cycles() const {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(size() + 1, false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[start] || (*this)(start) == start) continue;
    std::vector<int> cycle;
    for (int i = start; !seen[i]; i = (*this)(i)) {
      seen[i] = true;
      cycle.push_back(i);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::vector<int> Permutation::CycleType() const {
  std::vector<int> type;
  for (const auto& c : Cycles()) type.push_back(static_cast<int>(c.size()));
  std::sort(type.begin(), type.end());
  return type;
}

std::string Permutation::ToCycleString() const {
  auto cycles = Cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (size_t k = 0; k < c.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out;
}

}  // namespace braidmon
