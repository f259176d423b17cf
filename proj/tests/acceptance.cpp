// One PASS/FAIL line per acceptance criterion, with runtimes. Exits nonzero
// if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "braidmon/burau/affine_symmetry.hpp"
#include "braidmon/burau/burau.hpp"
#include "braidmon/burau/closure.hpp"
#include "braidmon/cli/commands.hpp"
#include "braidmon/equivalence/equivalence.hpp"
#include "braidmon/fpgroups/homs.hpp"
#include "braidmon/fpgroups/smith.hpp"
#include "braidmon/fpgroups/tietze.hpp"
#include "braidmon/monodromy/eyral_oka.hpp"
#include "braidmon/structural/verify.hpp"
#include "braidmon/words/garside.hpp"
#include "braidmon/words/text.hpp"
#include "braidmon/zvk/zvk.hpp"
#include "random_words.hpp"

using namespace braidmon;
using braidmon::testing::RandomBraid;
using braidmon::testing::RandomFreeWord;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

struct Result {
  bool pass = false;
  std::string detail;
};

const Partition kPairs = Partition::Parse("1,2|3,4", 4);

std::vector<BraidWord> BaseGens() { return ParseBraidWordList("s1^-2, s2^-2, s1 s2 s1^-1", 3); }

const FiniteImage& ReferenceImage() {
  static const FiniteImage image(BurauRepresentation(4, 4, 3, true), kPairs);
  return image;
}

std::string Join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

// The printed generator images, the six printed orbit matrices, the orbit
// triples built from them, the printed class of the swapped tuple, and the
// printed induced permutations.
const std::vector<Rows> kPrintedGenerators = {{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}},
                                              {{2, 3, 0}, {1, 0, 0}, {0, 0, 1}},
                                              {{1, 0, 0}, {0, 2, 3}, {0, 1, 0}}};
const std::vector<Rows> kP = {
    {{0, 3, 2}, {0, 2, 3}, {1, 2, 2}}, {{3, 0, 3}, {1, 3, 0}, {3, 2, 2}}, {{1, 0, 1}, {0, 2, 1}, {0, 1, 1}},
    {{0, 1, 2}, {1, 3, 2}, {2, 1, 1}}, {{2, 3, 0}, {1, 3, 2}, {0, 3, 3}}, {{1, 2, 1}, {1, 3, 0}, {1, 0, 0}}};
const std::vector<std::vector<int>> kPrintedOrbit = {{0, 1, 2}, {1, 3, 2}, {0, 2, 4},
                                                     {3, 0, 2}, {2, 5, 4}, {3, 2, 5}};
const std::vector<Rows> kPrintedSwapped = {{{2, 2, 3}, {0, 3, 1}, {3, 0, 3}},
                                           {{3, 3, 0}, {0, 1, 3}, {2, 1, 0}},
                                           {{3, 3, 2}, {3, 0, 2}, {1, 0, 1}}};
const std::vector<std::string> kPrintedPermutations = {"(1,2,4)(3,5,6)", "(1,3,5)(2,4,6)", "(1,3,4)(2,5,6)"};

std::vector<int> Tuple(const FiniteImage& image, const std::vector<Rows>& mats) {
  std::vector<int> out;
  for (const auto& m : mats) {
    const int i = image.group().IndexOf(ModMatrix::FromRows(m, 4));
    if (i < 0) throw VerificationError("printed matrix is not in F");
    out.push_back(i);
  }
  return out;
}

struct IndexOps {
  const FiniteImage* image;
  int Multiply(int a, int b) const { return image->Multiply(a, b); }
  int Inverse(int a) const { return image->Inverse(a); }
};

Result BurauMatrices() {
  const BurauRepresentation rep(4, 4, 3);
  std::vector<std::string> shown;
  bool pass = true;
  for (size_t i = 0; i < 3; ++i) {
    pass = pass && rep.generators()[i] == ModMatrix::FromRows(kPrintedGenerators[i], 4);
    shown.push_back("s" + std::to_string(i + 1) + "->" + rep.generators()[i].ToString());
  }
  return {pass, Join(shown)};
}

Result ClosureOrder() {
  const FiniteMatrixGroup g = Closure(BurauRepresentation(4, 4, 3).generators());
  return {g.order() == 768, "|F| = " + std::to_string(g.order())};
}

Result FullTwist() {
  const Factorization f = EyralOkaFactorization();
  const BraidWord lhs = EyralOkaCompletion() * f.DescendingProduct();
  const bool equal = BraidEqual(lhs, HalfTwist(4).Power(4));
  const GarsideNormalForm nf = ComputeGarsideNormalForm(lhs);
  return {equal && nf.delta_power == 4 && nf.factors.empty(),
          "normal form Delta^" + std::to_string(nf.delta_power) + " with " + std::to_string(nf.factors.size()) +
              " further factors"};
}

Result DecomposedPresentation() {
  const Presentation p = ZvkPresentation(EyralOkaFactorization(), ZvkMode::kDecomposed);
  const AbelianInvariants ab = Abelianization(p);
  const bool pass = p.generators() == 4 && p.relators().size() == 6 && ab.ToString() == "Z";
  return {pass, std::to_string(p.generators()) + " generators, " + std::to_string(p.relators().size()) +
                    " relators (total length " + std::to_string(p.TotalLength()) + "), abelianization " +
                    ab.ToString()};
}

Result ProjectiveQuotients() {
  const Presentation p = ZvkPresentation(EyralOkaFactorization(), ZvkMode::kDecomposed);
  const MeridiansAtInfinity m = ComputeMeridiansAtInfinity(4);
  const FiniteGroupTable s3 = BuiltinGroup("S3"), s4 = BuiltinGroup("S4");
  // Golden values from the first verified run.
  const std::uint64_t kS3 = 12, kS4 = 90;
  bool pass = true;
  std::vector<std::string> shown;
  for (const auto& [name, meridian] : {std::pair{"line", m.line}, std::pair{"exceptional", m.exceptional}}) {
    const Presentation q = ProjectiveQuotient(p, meridian);
    const std::string ab = Abelianization(q).ToString();
    const std::uint64_t h3 = CountHoms(q, s3), h4 = CountHoms(q, s4);
    pass = pass && ab == "Z/6" && h3 == kS3 && h4 == kS4;
    shown.push_back(std::string(name) + ": " + ab + ", |Hom(-,S3)| = " + std::to_string(h3) +
                    ", |Hom(-,S4)| = " + std::to_string(h4));
  }
  return {pass, Join(shown, "; ")};
}

Result Orbit() {
  const FiniteImage& image = ReferenceImage();
  const std::vector<int> t = image.ImageTuple(EyralOkaFactorization());
  const HurwitzOrbit orbit = EnumerateHurwitzOrbit(CanonicalClass(t, image), BaseGens(), image);
  bool pass = orbit.classes.size() == 6;
  // ours[k]: orbit position of the k-th printed triple.
  std::vector<int> ours;
  for (const auto& triple : kPrintedOrbit) {
    const std::vector<int> printed = Tuple(image, {kP[triple[0]], kP[triple[1]], kP[triple[2]]});
    ours.push_back(orbit.IndexOf(CanonicalClass(printed, image)));
  }
  pass = pass && std::none_of(ours.begin(), ours.end(), [](int i) { return i < 0; }) &&
         std::set<int>(ours.begin(), ours.end()).size() == 6;
  if (!pass) return {false, "orbit size " + std::to_string(orbit.classes.size()) + ", printed triples not all found"};

  // Induced permutations in the printed numbering.
  auto printed = [&](const Permutation& p) {
    std::vector<int> img(6);
    for (int k = 0; k < 6; ++k)
      img[k] = static_cast<int>(std::find(ours.begin(), ours.end(), p(ours[k] + 1) - 1) - ours.begin()) + 1;
    return Permutation::FromImages(img);
  };
  std::vector<std::string> shown;
  for (size_t g = 0; g < 3; ++g) {
    const Permutation p = printed(orbit.permutations[g]);
    pass = pass && p.CycleType() == std::vector<int>{3, 3};
    shown.push_back(p.ToCycleString());
  }
  // The third printed permutation is induced by s1^-1 s2 s1.
  const IndexOps ops{&image};
  std::vector<int> img;
  for (const auto& c : orbit.classes)
    img.push_back(orbit.IndexOf(CanonicalClass(
                      ApplyHurwitzBraid(c.representative, ParseBraidWord("s1^-1 s2 s1", 3), ops), image)) +
                  1);
  const std::string conjugate_side = printed(Permutation::FromImages(img)).ToCycleString();
  pass = pass && shown[0] == kPrintedPermutations[0] && shown[1] == kPrintedPermutations[1] &&
         conjugate_side == kPrintedPermutations[2];
  return {pass, "6 classes, all printed triples present; permutations " + Join(shown) +
                    " (cycle type 3,3); s1^-1 s2 s1 induces " + conjugate_side};
}

Result Swapped() {
  const FiniteImage& image = ReferenceImage();
  const Factorization swapped = ConjugateFactorization(EyralOkaFactorization(), EyralOkaSwap());
  const bool printed_class =
      CanonicalClass(image.ImageTuple(swapped), image) == CanonicalClass(Tuple(image, kPrintedSwapped), image);
  DistinguishOptions options;
  options.reverse_strands = true;
  options.base_blocks = Partition::Parse("1,3|2", 3);
  const Verdict v = Distinguish(EyralOkaFactorization(), swapped, kPairs, BaseGens(), options);
  const cli::RunResult r = cli::Run("distinguish", cli::Options{});
  const std::string cli_outcome = r.report["outputs"]["verdict"]["outcome"];
  return {printed_class && v.distinguished && cli_outcome == "distinguished",
          std::string("printed [T~] class ") + (printed_class ? "matches" : "differs") + "; not in the " +
              std::to_string(v.orbit.classes.size()) + "-class orbit: " + (v.distinguished ? "yes" : "no") +
              "; distinguish -> " + cli_outcome};
}

Result Structure() {
  const StructuralReport report = VerifyStructure();
  std::vector<std::string> shown;
  for (const auto& c : report.checks) shown.push_back("(" + c.id + ") " + (c.passed ? "pass" : "FAIL"));
  const cli::RunResult r = cli::Run("verify-structure", cli::Options{});
  return {report.AllPassed() && report.checks.size() == 5 && r.exit_code == 0,
          Join(shown) + "; verify-structure exit " + std::to_string(r.exit_code)};
}

Result Identity() {
  const bool holds = PolynomialIdentityCheck();
  const QuadraticPoly h = AffineEquation();
  const bool direct = AffineReflection(h) == h.NegateA();
  const cli::RunResult r = cli::Run("verify-identity", cli::Options{});
  return {holds && direct && r.exit_code == 0,
          std::string("h_a(x, -y + (x^2-1)/4) - h_{-a}(x, y) ") + (direct ? "== 0" : "!= 0") +
              "; verify-identity exit " + std::to_string(r.exit_code)};
}

// Each suite returns (cases run, failures).
std::pair<int, int> BraidRelationSuite() {
  std::mt19937_64 rng(1001);
  int failures = 0, cases = 0;
  for (; cases < 200; ++cases) {
    const int n = 3 + cases % 4;
    const BraidWord u = RandomBraid(rng, n, 12), v = RandomBraid(rng, n, 12);
    std::uniform_int_distribution<int> pick(1, n - 2);
    const int i = pick(rng);
    bool ok = BraidEqual(u * BraidWord(n, {i, i + 1, i}) * v, u * BraidWord(n, {i + 1, i, i + 1}) * v);
    if (n >= 4) ok = ok && BraidEqual(u * BraidWord(n, {1, 3}) * v, u * BraidWord(n, {3, 1}) * v);
    ok = ok && BraidEqual(ComputeGarsideNormalForm(u).ToWord(), u);
    ok = ok && !BraidEqual(u * BraidWord(n, {1}), u);
    failures += !ok;
  }
  return {cases, failures};
}

std::pair<int, int> RightActionSuite() {
  std::mt19937_64 rng(1002);
  int failures = 0, cases = 0;
  for (; cases < 200; ++cases) {
    const int d = 2 + cases % 5;
    const FreeWord w = RandomFreeWord(rng, d, 8);
    const BraidWord a = RandomBraid(rng, d, 6), b = RandomBraid(rng, d, 6);
    bool ok = ActOnFree(ActOnFree(w, a), b) == ActOnFree(w, a * b);
    ok = ok && ActOnFree(ActOnFree(w, a), a.Inverse()) == w;
    ok = ok && ActOnFree(w, ComputeGarsideNormalForm(a).ToWord()) == ActOnFree(w, a);
    failures += !ok;
  }
  return {cases, failures};
}

std::pair<int, int> HurwitzSuite() {
  std::mt19937_64 rng(1003);
  const BraidGroupOps ops;
  int failures = 0, cases = 0;
  for (; cases < 150; ++cases) {
    const int d = 3 + cases % 2, r = 2 + cases % 3;
    std::vector<BraidWord> t;
    for (int i = 0; i < r; ++i) t.push_back(RandomBraid(rng, d, 5));
    const BraidWord move = RandomBraid(rng, r, 4);
    const auto moved = ApplyHurwitzBraid(t, move, ops);
    bool ok = BraidEqual(Factorization::FromTaus(d, t).DescendingProduct(),
                         Factorization::FromTaus(d, moved).DescendingProduct());
    const auto back = ApplyHurwitzBraid(moved, move.Inverse(), ops);
    for (int i = 0; i < r; ++i) ok = ok && BraidEqual(back[i], t[i]);
    failures += !ok;
  }
  return {cases, failures};
}

std::pair<int, int> SmithSuite() {
  std::mt19937_64 rng(1004);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<long> entry(-20, 20);
  int failures = 0, cases = 0;
  for (; cases < 200; ++cases) {
    IntegerMatrix m(dim(rng), dim(rng));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    const SmithForm s = SmithNormalForm(m);
    bool ok = s.u * m * s.v == s.diagonal && abs(s.u.Determinant()) == 1 && abs(s.v.Determinant()) == 1;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (i != j) ok = ok && s.diagonal(i, j) == 0;
    for (size_t k = 0; k + 1 < s.invariants.size(); ++k)
      ok = ok && (s.invariants[k] == 0 ? s.invariants[k + 1] == 0 : s.invariants[k + 1] % s.invariants[k] == 0);
    failures += !ok;
  }
  return {cases, failures};
}

std::pair<int, int> CanonicalClassSuite() {
  const FiniteImage& image = ReferenceImage();
  std::mt19937_64 rng(1005);
  std::uniform_int_distribution<int> pick_f(0, static_cast<int>(image.group().order()) - 1);
  std::uniform_int_distribution<int> pick_a(0, static_cast<int>(image.subgroup().size()) - 1);
  int failures = 0, cases = 0;
  for (; cases < 150; ++cases) {
    const std::vector<int> t{pick_f(rng), pick_f(rng), pick_f(rng)};
    const int f = image.subgroup()[pick_a(rng)];
    std::vector<int> conj;
    for (int x : t) conj.push_back(image.Conjugate(x, f));
    failures += !(CanonicalClass(conj, image) == CanonicalClass(t, image));
  }
  return {cases, failures};
}

std::pair<int, int> TietzeSuite() {
  const FiniteGroupTable s3 = BuiltinGroup("S3"), s4 = BuiltinGroup("S4");
  std::mt19937_64 rng(1006);
  int failures = 0, cases = 0;
  for (; cases < 120; ++cases) {
    const int n = 2 + cases % 3;
    std::vector<FreeWord> rels;
    for (int r = 0; r < 1 + cases % 4; ++r) rels.push_back(RandomFreeWord(rng, n, 7));
    const Presentation p(n, rels);
    const Presentation q = TietzeSimplify(p);
    failures += !(Abelianization(p) == Abelianization(q) && CountHoms(p, s3) == CountHoms(q, s3) &&
                  CountHoms(p, s4) == CountHoms(q, s4));
  }
  return {cases, failures};
}

Result PropertySuites() {
  const std::vector<std::pair<std::string, std::function<std::pair<int, int>()>>> suites = {
      {"braid relations", BraidRelationSuite}, {"right action", RightActionSuite},
      {"hurwitz", HurwitzSuite},               {"smith", SmithSuite},
      {"canonical class", CanonicalClassSuite}, {"tietze homs", TietzeSuite}};
  bool pass = true;
  std::vector<std::string> shown;
  for (const auto& [name, run] : suites) {
    const auto [cases, failures] = run();
    pass = pass && cases >= 100 && failures == 0;
    shown.push_back(name + " " + std::to_string(cases - failures) + "/" + std::to_string(cases));
  }
  return {pass, Join(shown)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_s;  // 0 for no limit
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Burau generators at Z/4, t=3", 1, BurauMatrices},
      {2, "closure order 768", 5, ClosureOrder},
      {3, "completion * product = Delta^4", 1, FullTwist},
      {4, "decomposed ZvK presentation", 0, DecomposedPresentation},
      {5, "projective quotients", 0, ProjectiveQuotients},
      {6, "Hurwitz orbit of [T]", 10, Orbit},
      {7, "[T~] outside the orbit", 10, Swapped},
      {8, "structural checks", 0, Structure},
      {9, "affine polynomial identity", 1, Identity},
      {10, "property suites", 0, PropertySuites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto begin = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    if (c.limit_s > 0 && seconds >= c.limit_s) {
      r.pass = false;
      r.detail += "; over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
    }
    failed += !r.pass;
    std::printf("%s %2d %-34s %8.3f s  %s\n", r.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                r.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
