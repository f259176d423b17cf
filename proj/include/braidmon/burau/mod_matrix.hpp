#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace braidmon {

// Square matrix over Z/m, entries kept in [0, m).
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(int size, std::int64_t modulus);
  static ModMatrix Identity(int size, std::int64_t modulus);
  // Entries are reduced to least non-negative residues.
  static ModMatrix FromRows(const std::vector<std::vector<std::int64_t>>& rows, std::int64_t modulus);

  int size() const { return size_; }
  std::int64_t modulus() const { return modulus_; }
  std::int64_t operator()(int r, int c) const { return data_[static_cast<size_t>(r) * size_ + c]; }
  void Set(int r, int c, std::int64_t v);
  const std::vector<std::int64_t>& entries() const { return data_; }

  std::int64_t Determinant() const;
  bool IsInvertible() const;
  bool IsIdentity() const;

  std::vector<std::vector<std::int64_t>> Rows() const;
  // "[[1,0,0],[1,1,0],[1,0,1]]"
  std::string ToString() const;

  bool operator==(const ModMatrix&) const = default;
  // Lexicographic by row-major entries (size and modulus first).
  auto operator<=>(const ModMatrix&) const = default;

 private:
  int size_ = 0;
  std::int64_t modulus_ = 1;
  std::vector<std::int64_t> data_;
};

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);

nlohmann::json ModMatrixToJson(const ModMatrix& m);

struct ModMatrixHash {
  size_t operator()(const ModMatrix& m) const;
};

}  // namespace braidmon
