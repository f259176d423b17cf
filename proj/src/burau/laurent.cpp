#include "braidmon/burau/laurent.hpp"

#include <numeric>

#include "braidmon/error.hpp"

namespace braidmon {

Laurent::Laurent(long constant) {
  if (constant != 0) terms_[0] = constant;
}

Laurent Laurent::Monomial(const mpz_class& coeff, int exponent) {
  Laurent p;
  p.Add(exponent, coeff);
  return p;
}

mpz_class Laurent::Coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void Laurent::Add(int exponent, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Laurent Laurent::operator-() const {
  Laurent p;
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) Add(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) Add(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.Add(ea + eb, ca * cb);
  return p;
}

namespace {

std::int64_t PowMod(std::int64_t base, long exp, std::int64_t m) {
  std::int64_t result = 1 % m, b = base % m;  // m <= 2^31 keeps products in range
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return result;
}

}  // namespace

std::int64_t Laurent::Evaluate(std::int64_t modulus, std::int64_t s) const {
  if (modulus < 1 || modulus > (std::int64_t{1} << 31)) throw InputError("modulus must lie in [1, 2^31]");
  s = ((s % modulus) + modulus) % modulus;
  std::int64_t s_inv = -1;
  mpz_class acc = 0;
  for (const auto& [e, c] : terms_) {
    std::int64_t power;
    if (e >= 0) {
      power = PowMod(s, e, modulus);
    } else {
      if (s_inv < 0) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), mpz_class(s).get_mpz_t(), mpz_class(modulus).get_mpz_t()) == 0)
          throw InputError("t is not a unit modulo " + std::to_string(modulus));
        s_inv = inv.get_si();
      }
      power = PowMod(s_inv, -static_cast<long>(e), modulus);
    }
    acc += c * power;
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(), mpz_class(modulus).get_mpz_t());
  return r.get_si();
}

std::string Laurent::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && e != 0;
    if (!unit) out += mag.get_str();
    if (e != 0) {
      if (!unit) out += "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentMatrix::LaurentMatrix(int size) : size_(size), data_(static_cast<size_t>(size) * size) {}

LaurentMatrix LaurentMatrix::Identity(int size) {
  LaurentMatrix m(size);
  for (int i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

Laurent LaurentMatrix::Determinant() const {
  // Leibniz expansion; sizes here stay below 8.
  std::vector<int> perm(size_);
  std::iota(perm.begin(), perm.end(), 0);
  Laurent det;
  do {
    int inversions = 0;
    for (int i = 0; i < size_; ++i)
      for (int j = i + 1; j < size_; ++j) inversions += perm[i] > perm[j];
    Laurent term = inversions % 2 ? Laurent(-1) : Laurent(1);
    for (int i = 0; i < size_ && !term.IsZero(); ++i) term = term * (*this)(i, perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::string LaurentMatrix::ToString() const {
  std::string out = "[";
  for (int i = 0; i < size_; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < size_; ++j) {
      if (j) out += ",";
      out += (*this)(i, j).ToString();
    }
    out += "]";
  }
  return out + "]";
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.size() != b.size()) throw InputError("matrix size mismatch");
  LaurentMatrix m(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int k = 0; k < a.size(); ++k) {
      if (a(i, k).IsZero()) continue;
      for (int j = 0; j < a.size(); ++j) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

}  // namespace braidmon
