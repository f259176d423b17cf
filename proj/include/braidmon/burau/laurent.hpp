#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace braidmon {

// Integer Laurent polynomial in t; zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long constant);  // NOLINT: integers embed as constants
  static Laurent Monomial(const mpz_class& coeff, int exponent);
  static Laurent T(int exponent = 1) { return Monomial(1, exponent); }

  const std::map<int, mpz_class>& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }
  mpz_class Coefficient(int exponent) const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  bool operator==(const Laurent&) const = default;

  // Value at t = s in Z/m; s must be a unit when negative powers occur.
  std::int64_t Evaluate(std::int64_t modulus, std::int64_t s) const;
  std::string ToString() const;

 private:
  void Add(int exponent, const mpz_class& c);
  std::map<int, mpz_class> terms_;
};

class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  explicit LaurentMatrix(int size);
  static LaurentMatrix Identity(int size);

  int size() const { return size_; }
  Laurent& operator()(int r, int c) { return data_[static_cast<size_t>(r) * size_ + c]; }
  const Laurent& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * size_ + c]; }

  Laurent Determinant() const;
  std::string ToString() const;
  bool operator==(const LaurentMatrix&) const = default;

 private:
  int size_ = 0;
  std::vector<Laurent> data_;
};

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);

}  // namespace braidmon
