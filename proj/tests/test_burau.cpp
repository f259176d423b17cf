#include <random>

#include "doctest.h"

#include "braidmon/burau/affine_symmetry.hpp"
#include "braidmon/burau/burau.hpp"
#include "braidmon/burau/closure.hpp"
#include "braidmon/error.hpp"
#include "braidmon/words/garside.hpp"
#include "braidmon/words/text.hpp"
#include "random_words.hpp"

using namespace braidmon;
using braidmon::testing::RandomBraid;

namespace {

ModMatrix M4(const std::vector<std::vector<std::int64_t>>& rows) { return ModMatrix::FromRows(rows, 4); }

// p + q*sqrt(3)
struct Q3 {
  mpq_class p, q;
};
Q3 operator+(const Q3& a, const Q3& b) { return {a.p + b.p, a.q + b.q}; }
Q3 operator-(const Q3& a, const Q3& b) { return {a.p - b.p, a.q - b.q}; }
Q3 operator*(const Q3& a, const Q3& b) { return {a.p * b.p + 3 * a.q * b.q, a.p * b.q + a.q * b.p}; }
bool operator==(const Q3& a, const Q3& b) { return a.p == b.p && a.q == b.q; }
Q3 Num(const mpq_class& v) { return {v, 0}; }

// h_a written out directly from its defining formula.
Q3 DirectH(const Q3& a, const mpq_class& x, const mpq_class& y) {
  const Q3 u = Num((x * x - 1) / 4);
  const Q3 Y = Num(y);
  const Q3 d = Y - u;
  const Q3 inner = a * Num(mpq_class(2, 3)) * Y - (a * Num(2) + Num(3)) * Num(mpq_class(1, 24)) * Num(x * x - 1);
  return Y * Y * d * d + Num(mpq_class(1, 2)) * inner * inner * inner;
}

Q3 EvaluatePoly(const QuadraticPoly& poly, const mpq_class& x, const mpq_class& y, int a_sign) {
  Q3 acc{0, 0};
  for (const auto& [m, c] : poly.terms()) {
    const auto [i, j, k] = m;
    Q3 term = Num(c);
    for (int e = 0; e < i; ++e) term = term * Num(x);
    for (int e = 0; e < j; ++e) term = term * Num(y);
    if (k) term = term * Q3{0, a_sign};
    acc = acc + term;
  }
  return acc;
}

}  // namespace

TEST_CASE("laurent arithmetic") {
  const Laurent t = Laurent::T();
  const Laurent p = Laurent(1) - t;
  CHECK((p * p).ToString() == "t^2 - 2*t + 1");
  CHECK((t * Laurent::T(-1)) == Laurent(1));
  CHECK((p - p).IsZero());
  CHECK(Laurent::T(-2).Evaluate(4, 3) == 1);
  CHECK((Laurent(1) - t).Evaluate(4, 3) == 2);
  CHECK(Laurent::T(-1).Evaluate(7, 3) == 5);
  CHECK_THROWS_AS(Laurent::T(-1).Evaluate(4, 2), InputError);
}

TEST_CASE("reduced burau satisfies the braid relations") {
  for (int n = 2; n <= 6; ++n) {
    const auto g = ReducedBurau(n);
    const auto inv = ReducedBurauInverses(n);
    REQUIRE(static_cast<int>(g.size()) == n - 1);
    const LaurentMatrix id = LaurentMatrix::Identity(n - 1);
    for (int i = 0; i + 1 < n; ++i) {
      CHECK(g[i] * inv[i] == id);
      CHECK(inv[i] * g[i] == id);
      CHECK(g[i].Determinant() == -Laurent::T());
      for (int j = i + 1; j + 1 < n; ++j) {
        if (j == i + 1) CHECK(g[i] * g[j] * g[i] == g[j] * g[i] * g[j]);
        else CHECK(g[i] * g[j] == g[j] * g[i]);
      }
    }
  }
  CHECK_THROWS_AS(ReducedBurau(1), InputError);
  CHECK(ReducedBurau(2)[0](0, 0) == -Laurent::T());
}

TEST_CASE("specialization at Z/4, t = 3") {
  const auto s = Specialize(ReducedBurau(4), 4, 3);
  CHECK(s[0] == M4({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}));
  CHECK(s[1] == M4({{2, 3, 0}, {1, 0, 0}, {0, 0, 1}}));
  CHECK(s[2] == M4({{1, 0, 0}, {0, 2, 3}, {0, 1, 0}}));
  CHECK(s[0] * s[1] * s[0] == s[1] * s[0] * s[1]);
  CHECK(s[1] * s[2] * s[1] == s[2] * s[1] * s[2]);
  CHECK(s[0] * s[2] == s[2] * s[0]);
  CHECK(s[0].ToString() == "[[1,0,0],[1,1,0],[1,0,1]]");
  CHECK_THROWS_AS(Specialize(ReducedBurau(4), 4, 2), InputError);
  CHECK_THROWS_AS(BurauRepresentation(4, 6, 3), InputError);
}

TEST_CASE("apply follows the composition convention") {
  const BurauRepresentation rep(4, 4, 3);
  CHECK(rep.Apply(BraidWord(4)).IsIdentity());
  CHECK(rep.Apply(ParseBraidWord("s1 s2 s1", 4)) == rep.Apply(ParseBraidWord("s2 s1 s2", 4)));
  CHECK(rep.Apply(ParseBraidWord("s1 s2", 4)) == rep.generators()[0] * rep.generators()[1]);
  CHECK(rep.Apply(ParseBraidWord("s2^-1", 4)) == rep.inverses()[1]);
  CHECK_THROWS_AS(rep.Apply(BraidWord(3)), InputError);

  const BurauRepresentation reversed(4, 4, 3, true);
  CHECK(reversed.Apply(ParseBraidWord("s1", 4)) == rep.generators()[2]);
  CHECK(reversed.Apply(ParseBraidWord("s3 s2^-1", 4)) == rep.generators()[0] * rep.inverses()[1]);
}

TEST_CASE("burau images at t = 1 are permutation actions") {
  // The reduced representation at t = 1 is the standard representation of
  // the underlying permutation: trace = fixed points - 1.
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const BraidWord b = RandomBraid(rng, n, 12);
    const LaurentMatrix m = ApplyBurau(b);
    long trace = 0;
    for (int i = 0; i < n - 1; ++i) trace += mpz_class(m(i, i).Evaluate(1 << 20, 1)).get_si();
    if (trace > (1 << 19)) trace -= 1 << 20;
    const Permutation p = UnderlyingPermutation(b);
    long fixed = 0;
    for (int i = 1; i <= n; ++i) fixed += p(i) == i;
    CHECK(trace == fixed - 1);
  }
}

TEST_CASE("garside-equal braids have equal burau images") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 5;
    const BraidWord u = RandomBraid(rng, n, 10);
    const BraidWord v = ComputeGarsideNormalForm(u).ToWord();
    REQUIRE(BraidEqual(u, v));
    CHECK(ApplyBurau(u) == ApplyBurau(v));
    for (auto [m, s] : {std::pair<int, int>{4, 3}, {5, 2}, {9, 7}}) {
      const BurauRepresentation rep(n, m, s);
      CHECK(rep.Apply(u) == rep.Apply(v));
    }
  }
}

TEST_CASE("closure examples") {
  const auto s = Specialize(ReducedBurau(4), 4, 3);
  CHECK(Closure({ModMatrix::Identity(3, 4)}).order() == 1);
  const FiniteMatrixGroup c1 = Closure({s[0]});
  CHECK(c1.order() == 4);
  CHECK(c1[0].IsIdentity());

  const FiniteMatrixGroup f = Closure(s);
  CHECK(f.order() == 768);
  // |GL(3, Z/4)| = 2^9 * 168.
  CHECK(86016 % f.order() == 0);
  for (size_t i = 0; i < f.order(); ++i) {
    const int inv = f.Inverse(static_cast<int>(i));
    REQUIRE(inv >= 0);
    CHECK((f[i] * f[inv]).IsIdentity());
  }
  CHECK(f.generator_indices().size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(f[f.generator_indices()[k]] == s[k]);
}

TEST_CASE("closure ordering is deterministic") {
  const auto s = Specialize(ReducedBurau(4), 4, 3);
  const FiniteMatrixGroup a = Closure(s);
  const FiniteMatrixGroup b = Closure({s[2], s[0], s[1]});
  CHECK(a.elements() == b.elements());
  CHECK(a.elements() == Closure(s).elements());
}

TEST_CASE("closure errors") {
  CHECK_THROWS_AS(Closure({M4({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}})}), InputError);
  CHECK_THROWS_AS(Closure(Specialize(ReducedBurau(4), 4, 3), 100), BudgetExceeded);
  CHECK_THROWS_AS(Closure({}), InputError);
}

TEST_CASE("closure as a group table") {
  const FiniteMatrixGroup f = Closure({Specialize(ReducedBurau(3), 4, 3)});
  const FiniteGroupTable t = f.ToGroupTable("F3");
  CHECK(t.order() == static_cast<int>(f.order()));
  CHECK(t.identity() == 0);
}

TEST_CASE("affine symmetry identity") {
  CHECK(PolynomialIdentityCheck());
  const QuadraticPoly h = AffineEquation();
  CHECK((h - h).IsZero());
  CHECK(AffineReflection(AffineReflection(h)) == h);
  CHECK_FALSE(AffineReflection(h) == h);
  CHECK(h.NegateA().NegateA() == h);
}

TEST_CASE("affine symmetry at sample points") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  const Q3 root{0, 1}, neg_root{0, -1};
  const QuadraticPoly h = AffineEquation();
  for (int trial = 0; trial < 50; ++trial) {
    const mpq_class x(num(rng), den(rng)), y(num(rng), den(rng));
    mpq_class xc = x, yc = y;
    xc.canonicalize();
    yc.canonicalize();
    const mpq_class reflected = (xc * xc - 1) / 4 - yc;
    CHECK(DirectH(root, xc, reflected) == DirectH(neg_root, xc, yc));
    CHECK(EvaluatePoly(h, xc, yc, 1) == DirectH(root, xc, yc));
    CHECK(EvaluatePoly(h, xc, yc, -1) == DirectH(neg_root, xc, yc));
  }
}
