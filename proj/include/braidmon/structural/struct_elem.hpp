#pragma once

#include <compare>
#include <string>
#include <vector>

#include "braidmon/words/free_word.hpp"

namespace braidmon {

// Element u * w^ew * a^ea * b^eb * g^k of G = (K x| V) x| Z, where u is a
// reduced word in the free generators x (1) and y (2) of K, w is the central
// involution of K, and V = <a, b> is a Klein group acting on K by
//   a^-1 y a = y w,  b^-1 x b = x w  (x, w fixed by a; y, w fixed by b),
// and g acts on G' = K x| V by
//   g x g^-1 = y^-1, g y g^-1 = y x b, g w g^-1 = w, g a g^-1 = b, g b g^-1 = a b.
class StructElem {
 public:
  StructElem() : u_(2) {}
  StructElem(FreeWord u, int ew, int ea, int eb, long k);

  static StructElem X();
  static StructElem Y();
  static StructElem W();
  static StructElem A();
  static StructElem B();
  static StructElem G();

  const FreeWord& u() const { return u_; }
  int w() const { return ew_; }
  int a() const { return ea_; }
  int b() const { return eb_; }
  long k() const { return k_; }
  bool IsIdentity() const { return *this == StructElem(); }

  StructElem Inverse() const;
  StructElem Power(long e) const;
  // g^times * p * g^-times for an element of G' (k == 0).
  StructElem ConjugatedByG(long times) const;

  std::string ToString() const;

  auto operator<=>(const StructElem&) const = default;

 private:
  FreeWord u_;
  int ew_ = 0, ea_ = 0, eb_ = 0;
  long k_ = 0;
};

StructElem operator*(const StructElem& p, const StructElem& q);
// p q p^-1 q^-1
StructElem Commutator(const StructElem& p, const StructElem& q);
// Image of a word in the generators of a presentation under generator images.
StructElem EvaluateWord(const FreeWord& w, const std::vector<StructElem>& images);

}  // namespace braidmon
