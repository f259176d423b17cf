#include "braidmon/burau/affine_symmetry.hpp"

namespace braidmon {

QuadraticPoly::QuadraticPoly(const mpq_class& c) { Add({0, 0, 0}, c); }

QuadraticPoly QuadraticPoly::X() {
  QuadraticPoly p;
  p.Add({1, 0, 0}, 1);
  return p;
}

QuadraticPoly QuadraticPoly::Y() {
  QuadraticPoly p;
  p.Add({0, 1, 0}, 1);
  return p;
}

QuadraticPoly QuadraticPoly::A() {
  QuadraticPoly p;
  p.Add({0, 0, 1}, 1);
  return p;
}

void QuadraticPoly::Add(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

QuadraticPoly QuadraticPoly::operator-() const {
  QuadraticPoly p;
  for (const auto& [m, c] : terms_) p.terms_[m] = -c;
  return p;
}

QuadraticPoly& QuadraticPoly::operator+=(const QuadraticPoly& o) {
  for (const auto& [m, c] : o.terms_) Add(m, c);
  return *this;
}

QuadraticPoly operator*(const QuadraticPoly& p, const QuadraticPoly& q) {
  QuadraticPoly r;
  for (const auto& [m1, c1] : p.terms_)
    for (const auto& [m2, c2] : q.terms_) {
      const auto [x1, y1, a1] = m1;
      const auto [x2, y2, a2] = m2;
      const int a = a1 + a2;
      // a^2 = 3
      r.Add({x1 + x2, y1 + y2, a % 2}, a == 2 ? mpq_class(3 * c1 * c2) : mpq_class(c1 * c2));
    }
  return r;
}

QuadraticPoly QuadraticPoly::Pow(int e) const {
  QuadraticPoly r(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

QuadraticPoly QuadraticPoly::SubstituteY(const QuadraticPoly& image) const {
  QuadraticPoly r;
  for (const auto& [m, c] : terms_) {
    const auto [x, y, a] = m;
    QuadraticPoly term;
    term.Add({x, 0, a}, c);
    r += term * image.Pow(y);
  }
  return r;
}

QuadraticPoly QuadraticPoly::NegateA() const {
  QuadraticPoly r;
  for (const auto& [m, c] : terms_) r.Add(m, std::get<2>(m) ? mpq_class(-c) : c);
  return r;
}

std::string QuadraticPoly::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const auto [x, y, a] = m;
    std::string monomial;
    if (x) monomial += "*x" + (x > 1 ? "^" + std::to_string(x) : "");
    if (y) monomial += "*y" + (y > 1 ? "^" + std::to_string(y) : "");
    if (a) monomial += "*a";
    const mpq_class magnitude = abs(c);
    if (monomial.empty() || magnitude != 1) out += magnitude.get_str() + monomial;
    else out += monomial.substr(1);
  }
  return out;
}

namespace {

QuadraticPoly ShiftU() {
  const QuadraticPoly x = QuadraticPoly::X();
  return (x * x - QuadraticPoly(1)) * QuadraticPoly(mpq_class(1, 4));
}

}  // namespace

QuadraticPoly AffineEquation() {
  const QuadraticPoly x = QuadraticPoly::X(), y = QuadraticPoly::Y(), a = QuadraticPoly::A();
  const QuadraticPoly quartic = y * y * (y - ShiftU()).Pow(2);
  const QuadraticPoly inner = a * y * QuadraticPoly(mpq_class(2, 3)) -
                              (a * QuadraticPoly(2) + QuadraticPoly(3)) * QuadraticPoly(mpq_class(1, 24)) *
                                  (x * x - QuadraticPoly(1));
  return quartic + QuadraticPoly(mpq_class(1, 2)) * inner.Pow(3);
}

QuadraticPoly AffineReflection(const QuadraticPoly& p) { return p.SubstituteY(ShiftU() - QuadraticPoly::Y()); }

bool PolynomialIdentityCheck() {
  const QuadraticPoly h = AffineEquation();
  return AffineReflection(h) == h.NegateA();
}

}  // namespace braidmon
