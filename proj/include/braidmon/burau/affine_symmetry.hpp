#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <tuple>

namespace braidmon {

// Polynomial in Q[x, y][a] / (a^2 - 3): monomials x^i y^j a^k with k in {0, 1}.
class QuadraticPoly {
 public:
  using Monomial = std::tuple<int, int, int>;

  QuadraticPoly() = default;
  QuadraticPoly(const mpq_class& c);  // NOLINT: rationals embed as constants
  static QuadraticPoly X();
  static QuadraticPoly Y();
  static QuadraticPoly A();

  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }

  QuadraticPoly operator-() const;
  QuadraticPoly& operator+=(const QuadraticPoly& o);
  friend QuadraticPoly operator+(QuadraticPoly p, const QuadraticPoly& q) { return p += q; }
  friend QuadraticPoly operator-(QuadraticPoly p, const QuadraticPoly& q) { return p += -q; }
  friend QuadraticPoly operator*(const QuadraticPoly& p, const QuadraticPoly& q);
  QuadraticPoly Pow(int e) const;
  bool operator==(const QuadraticPoly&) const = default;

  // Replace y by `image` (x and a unchanged).
  QuadraticPoly SubstituteY(const QuadraticPoly& image) const;
  // a -> -a.
  QuadraticPoly NegateA() const;

  std::string ToString() const;

 private:
  void Add(const Monomial& m, const mpq_class& c);
  std::map<Monomial, mpq_class> terms_;
};

// h_a(x, y) = y^2 (y - (x^2-1)/4)^2 + 1/2 (2a/3 y - (2a+3)/24 (x^2-1))^3.
QuadraticPoly AffineEquation();

// The substitution y -> -y + (x^2-1)/4.
QuadraticPoly AffineReflection(const QuadraticPoly& p);

// Exact check that h_a(x, -y + (x^2-1)/4) == h_{-a}(x, y).
bool PolynomialIdentityCheck();

}  // namespace braidmon
