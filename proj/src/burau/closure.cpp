#include "braidmon/burau/closure.hpp"

#include <algorithm>

#include "braidmon/error.hpp"

namespace braidmon {

int FiniteMatrixGroup::IndexOf(const ModMatrix& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

int FiniteMatrixGroup::Multiply(int a, int b) const {
  const int c = IndexOf(elements_[a] * elements_[b]);
  if (c < 0) throw VerificationError("matrix group is not closed under products");
  return c;
}

int FiniteMatrixGroup::Inverse(int a) const {
  // In a finite group the inverse is the last power before the identity.
  ModMatrix prev = ModMatrix::Identity(elements_[a].size(), elements_[a].modulus());
  ModMatrix cur = elements_[a];
  while (!cur.IsIdentity()) {
    prev = cur;
    cur = cur * elements_[a];
  }
  return IndexOf(prev);
}

FiniteGroupTable FiniteMatrixGroup::ToGroupTable(const std::string& name) const {
  const size_t n = order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (size_t a = 0; a < n; ++a) {
    labels.push_back(elements_[a].ToString());
    for (size_t b = 0; b < n; ++b) table[a][b] = Multiply(static_cast<int>(a), static_cast<int>(b));
  }
  return FiniteGroupTable(name, std::move(table), std::move(labels));
}

FiniteMatrixGroup Closure(const std::vector<ModMatrix>& gens, size_t cap) {
  if (gens.empty()) throw InputError("closure needs at least one generator");
  const int size = gens[0].size();
  const auto modulus = gens[0].modulus();
  std::vector<ModMatrix> steps;
  for (const auto& g : gens) {
    if (g.size() != size || g.modulus() != modulus) throw InputError("closure generators differ in shape");
    if (!g.IsInvertible()) throw InputError("closure generator is not invertible: " + g.ToString());
    steps.push_back(g);
  }
  // Inverses by powering; the generators have finite order once invertible mod m.
  for (const auto& g : gens) {
    ModMatrix prev = ModMatrix::Identity(size, modulus), cur = g;
    size_t guard = 0;
    while (!cur.IsIdentity()) {
      if (++guard > cap) throw BudgetExceeded("generator order exceeds the closure cap");
      prev = cur;
      cur = cur * g;
    }
    steps.push_back(prev);
  }

  FiniteMatrixGroup group;
  auto add = [&group](const ModMatrix& m) {
    group.index_.emplace(m, static_cast<int>(group.elements_.size()));
    group.elements_.push_back(m);
  };
  add(ModMatrix::Identity(size, modulus));
  std::vector<ModMatrix> layer{group.elements_[0]};
  group.layers_ = 1;
  while (!layer.empty()) {
    std::vector<ModMatrix> next;
    for (const auto& x : layer)
      for (const auto& s : steps) {
        ModMatrix y = x * s;
        if (group.index_.count(y)) continue;
        next.push_back(y);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (group.elements_.size() + next.size() > cap)
      throw BudgetExceeded("matrix group closure exceeded " + std::to_string(cap) + " elements");
    for (const auto& y : next) add(y);
    if (!next.empty()) ++group.layers_;
    layer = std::move(next);
  }
  for (const auto& g : gens) group.generator_indices_.push_back(group.IndexOf(g));
  return group;
}

}  // namespace braidmon
