#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace braidmon {

using Integer = mpz_class;

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols);
  static IntegerMatrix Identity(int n);
  static IntegerMatrix FromRows(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Integer& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  void SwapRows(int a, int b);
  void SwapCols(int a, int b);
  // row[target] += factor * row[source]
  void AddRowMultiple(int target, int source, const Integer& factor);
  void AddColMultiple(int target, int source, const Integer& factor);
  void NegateRow(int r);

  // Exact determinant of a square matrix (fraction-free elimination).
  Integer Determinant() const;
  std::string ToString() const;

  bool operator==(const IntegerMatrix& other) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

}  // namespace braidmon
