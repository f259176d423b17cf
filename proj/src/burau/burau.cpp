#include "braidmon/burau/burau.hpp"

#include "braidmon/error.hpp"

namespace braidmon {

namespace {

void CheckStrands(int n) {
  if (n < 2) throw InputError("reduced Burau needs at least 2 strands");
}

}  // namespace

std::vector<LaurentMatrix> ReducedBurau(int n) {
  CheckStrands(n);
  const int k = n - 1;
  const Laurent t = Laurent::T();
  std::vector<LaurentMatrix> out;
  LaurentMatrix s1 = LaurentMatrix::Identity(k);
  for (int r = 0; r < k; ++r) s1(r, 0) = -t;
  out.push_back(s1);
  for (int i = 2; i < n; ++i) {
    LaurentMatrix m = LaurentMatrix::Identity(k);
    m(i - 2, i - 2) = Laurent(1) - t;
    m(i - 2, i - 1) = t;
    m(i - 1, i - 2) = 1;
    m(i - 1, i - 1) = 0;
    out.push_back(m);
  }
  return out;
}

std::vector<LaurentMatrix> ReducedBurauInverses(int n) {
  CheckStrands(n);
  const int k = n - 1;
  const Laurent t_inv = Laurent::T(-1);
  std::vector<LaurentMatrix> out;
  LaurentMatrix s1 = LaurentMatrix::Identity(k);
  s1(0, 0) = -t_inv;
  for (int r = 1; r < k; ++r) s1(r, 0) = -1;
  out.push_back(s1);
  for (int i = 2; i < n; ++i) {
    LaurentMatrix m = LaurentMatrix::Identity(k);
    m(i - 2, i - 2) = 0;
    m(i - 2, i - 1) = 1;
    m(i - 1, i - 2) = t_inv;
    m(i - 1, i - 1) = Laurent(1) - t_inv;
    out.push_back(m);
  }
  return out;
}

LaurentMatrix ApplyBurau(const BraidWord& b) {
  const auto gens = ReducedBurau(b.strands());
  const auto invs = ReducedBurauInverses(b.strands());
  LaurentMatrix m = LaurentMatrix::Identity(b.strands() - 1);
  for (int l : b.letters()) m = m * (l > 0 ? gens[l - 1] : invs[-l - 1]);
  return m;
}

std::vector<ModMatrix> Specialize(const std::vector<LaurentMatrix>& mats, std::int64_t modulus,
                                  std::int64_t s) {
  if (modulus < 2) throw InputError("modulus must be at least 2");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), mpz_class(static_cast<long>(s)).get_mpz_t(),
          mpz_class(static_cast<long>(modulus)).get_mpz_t());
  if (g != 1) throw InputError("t = " + std::to_string(s) + " is not a unit modulo " + std::to_string(modulus));
  std::vector<ModMatrix> out;
  for (const auto& m : mats) {
    ModMatrix r(m.size(), modulus);
    for (int i = 0; i < m.size(); ++i)
      for (int j = 0; j < m.size(); ++j) r.Set(i, j, m(i, j).Evaluate(modulus, s));
    out.push_back(r);
  }
  return out;
}

BurauRepresentation::BurauRepresentation(int strands, std::int64_t modulus, std::int64_t t,
                                         bool reverse_strands)
    : strands_(strands),
      modulus_(modulus),
      t_(t),
      reverse_(reverse_strands),
      gens_(Specialize(ReducedBurau(strands), modulus, t)),
      inverses_(Specialize(ReducedBurauInverses(strands), modulus, t)) {}

ModMatrix BurauRepresentation::Apply(const BraidWord& b) const {
  if (b.strands() != strands_)
    throw InputError("braid on " + std::to_string(b.strands()) + " strands applied to a " +
                     std::to_string(strands_) + "-strand representation");
  const BraidWord w = reverse_ ? ReverseStrands(b) : b;
  ModMatrix m = ModMatrix::Identity(strands_ - 1, modulus_);
  for (int l : w.letters()) m = m * (l > 0 ? gens_[l - 1] : inverses_[-l - 1]);
  return m;
}

}  // namespace braidmon
