#include "braidmon/burau/mod_matrix.hpp"

#include <gmpxx.h>

#include "braidmon/error.hpp"
#include "braidmon/fpgroups/integer_matrix.hpp"

namespace braidmon {

namespace {

std::int64_t Reduce(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

}  // namespace

ModMatrix::ModMatrix(int size, std::int64_t modulus)
    : size_(size), modulus_(modulus), data_(static_cast<size_t>(size) * size, 0) {
  if (size < 0) throw InputError("matrix size must be non-negative");
  if (modulus < 2 || modulus > (std::int64_t{1} << 31))
    throw InputError("modulus must lie in [2, 2^31]");
}

ModMatrix ModMatrix::Identity(int size, std::int64_t modulus) {
  ModMatrix m(size, modulus);
  for (int i = 0; i < size; ++i) m.Set(i, i, 1);
  return m;
}

ModMatrix ModMatrix::FromRows(const std::vector<std::vector<std::int64_t>>& rows, std::int64_t modulus) {
  ModMatrix m(static_cast<int>(rows.size()), modulus);
  for (int i = 0; i < m.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.size()) throw InputError("matrix is not square");
    for (int j = 0; j < m.size(); ++j) m.Set(i, j, rows[i][j]);
  }
  return m;
}

void ModMatrix::Set(int r, int c, std::int64_t v) {
  data_[static_cast<size_t>(r) * size_ + c] = Reduce(v, modulus_);
}

std::int64_t ModMatrix::Determinant() const {
  IntegerMatrix m(size_, size_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) m(i, j) = static_cast<long>((*this)(i, j));
  mpz_class d = m.Determinant(), r;
  mpz_fdiv_r(r.get_mpz_t(), d.get_mpz_t(), mpz_class(static_cast<long>(modulus_)).get_mpz_t());
  return r.get_si();
}

bool ModMatrix::IsInvertible() const {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), mpz_class(static_cast<long>(Determinant())).get_mpz_t(),
          mpz_class(static_cast<long>(modulus_)).get_mpz_t());
  return g == 1;
}

bool ModMatrix::IsIdentity() const { return *this == Identity(size_, modulus_); }

std::vector<std::vector<std::int64_t>> ModMatrix::Rows() const {
  std::vector<std::vector<std::int64_t>> rows(size_);
  for (int i = 0; i < size_; ++i)
    rows[i].assign(data_.begin() + static_cast<long>(i) * size_, data_.begin() + static_cast<long>(i + 1) * size_);
  return rows;
}

std::string ModMatrix::ToString() const {
  std::string out = "[";
  for (int i = 0; i < size_; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < size_; ++j) {
      if (j) out += ',';
      out += std::to_string((*this)(i, j));
    }
    out += ']';
  }
  return out + "]";
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.size() != b.size() || a.modulus() != b.modulus()) throw InputError("matrix shape or modulus mismatch");
  const int n = a.size();
  ModMatrix m(n, a.modulus());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t acc = 0;
      for (int k = 0; k < n; ++k) acc = (acc + a(i, k) * b(k, j)) % a.modulus();
      m.Set(i, j, acc);
    }
  return m;
}

nlohmann::json ModMatrixToJson(const ModMatrix& m) { return m.Rows(); }

size_t ModMatrixHash::operator()(const ModMatrix& m) const {
  size_t h = static_cast<size_t>(m.size()) * 1000003u;
  for (auto v : m.entries()) h = h * 1099511628211ull + static_cast<size_t>(v) + 1;
  return h;
}

}  // namespace braidmon
