#include "braidmon/fpgroups/integer_matrix.hpp"

#include <utility>

#include "braidmon/error.hpp"

namespace braidmon {

IntegerMatrix::IntegerMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Integer(0)) {
  if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be non-negative");
}

IntegerMatrix IntegerMatrix::Identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::FromRows(const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntegerMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InputError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

void IntegerMatrix::SwapRows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::SwapCols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::AddRowMultiple(int target, int source, const Integer& factor) {
  if (factor == 0) return;
  for (int j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntegerMatrix::AddColMultiple(int target, int source, const Integer& factor) {
  if (factor == 0) return;
  for (int i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntegerMatrix::NegateRow(int r) {
  for (int j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

Integer IntegerMatrix::Determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  // Bareiss elimination.
  IntegerMatrix m = *this;
  Integer sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n && swap < 0; ++i)
        if (m(i, k) != 0) swap = i;
      if (swap < 0) return 0;
      m.SwapRows(k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string IntegerMatrix::ToString() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ',';
      out += (*this)(i, j).get_str();
    }
    out += ']';
  }
  return out + "]";
}

bool IntegerMatrix::operator==(const IntegerMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix shape mismatch in product");
  IntegerMatrix m(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

}  // namespace braidmon
