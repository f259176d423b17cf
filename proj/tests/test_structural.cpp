#include <random>

#include "doctest.h"

#include "braidmon/fpgroups/homs.hpp"
#include "braidmon/fpgroups/smith.hpp"
#include "braidmon/monodromy/eyral_oka.hpp"
#include "braidmon/structural/verify.hpp"
#include "braidmon/zvk/zvk.hpp"
#include "random_words.hpp"

using namespace braidmon;

namespace {

StructElem RandomElem(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> bit(0, 1), k(-3, 3);
  return StructElem(testing::RandomFreeWord(rng, 2, 6), bit(rng), bit(rng), bit(rng), k(rng));
}

}  // namespace

TEST_CASE("structural arithmetic examples") {
  const StructElem x = StructElem::X(), y = StructElem::Y(), w = StructElem::W(), a = StructElem::A(),
                   g = StructElem::G();
  CHECK((w * w).IsIdentity());
  CHECK(a * y * a.Inverse() == y * w);
  CHECK(g * x * g.Inverse() == y.Inverse());
  CHECK(g * y * g.Inverse() == y * x * StructElem::B());
  CHECK((a * a).IsIdentity());
  CHECK(StructElem().ToString() == "1");
  CHECK((y * x * w * a * g.Power(2)).ToString() == "y x w a g^2");
  CHECK_THROWS_AS(StructElem(FreeWord(3), 0, 0, 0, 0), InputError);
}

TEST_CASE("structural group axioms") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const StructElem p = RandomElem(rng), q = RandomElem(rng), r = RandomElem(rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p * p.Inverse()).IsIdentity());
    CHECK((p.Inverse() * p).IsIdentity());
    CHECK(p * StructElem() == p);
    CHECK(StructElem() * p == p);
    // The g-exponent is a homomorphism to Z.
    CHECK((p * q).k() == p.k() + q.k());
  }
}

TEST_CASE("the derived part is closed") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    const StructElem p(testing::RandomFreeWord(rng, 2, 6), bit(rng), bit(rng), bit(rng), 0);
    const StructElem q(testing::RandomFreeWord(rng, 2, 6), bit(rng), bit(rng), bit(rng), 0);
    CHECK((p * q).k() == 0);
    CHECK(p.Inverse().k() == 0);
    CHECK(p.ConjugatedByG(1).ConjugatedByG(-1) == p);
  }
}

TEST_CASE("structure verification") {
  const StructuralReport report = VerifyStructure();
  REQUIRE(report.checks.size() == 5);
  for (const auto& c : report.checks) {
    INFO(c.id << ": " << c.detail);
    CHECK(c.passed);
  }
  CHECK(report.AllPassed());
  const auto j = StructuralReportToJson(report);
  CHECK(j["all_passed"] == true);
  CHECK(j["checks"][4]["id"] == "v");
}

TEST_CASE("central element") {
  const StructElem z = CentralElementZ();
  const StructElem x = StructElem::X(), y = StructElem::Y();
  for (const auto& h : ModelGenerators()) CHECK(Commutator(z, h).IsIdentity());
  CHECK(z * StructElem::G().Power(6) == Commutator(y, x));
  CHECK(ApplyHomomorphism(z, OuterAutomorphismImages()) == z * StructElem::W());
  // The other commutator convention does not give a central element.
  const StructElem other = Commutator(x, y) * StructElem::G().Power(-6);
  bool central = true;
  for (const auto& h : ModelGenerators()) central = central && Commutator(other, h).IsIdentity();
  CHECK_FALSE(central);
}

TEST_CASE("structural presentation") {
  const Presentation p = StructuralPresentation();
  CHECK(p.generators() == 6);
  CHECK(p.relators().size() == 17);
  CHECK(p.labels() == std::vector<std::string>{"x", "y", "w", "a", "b", "g"});
  for (const auto& r : p.relators()) {
    CHECK(EvaluateWord(r, ModelGenerators()).IsIdentity());
    CHECK(EvaluateWord(r, std::vector<StructElem>(6)).IsIdentity());
  }
  CHECK(Abelianization(p).ToString() == "Z");
}

TEST_CASE("structural and ZvK presentations agree on finite evidence") {
  const Presentation s = StructuralPresentation();
  const Presentation zvk = ZvkPresentation(EyralOkaFactorization(), ZvkMode::kDecomposed);
  CHECK(Abelianization(s) == Abelianization(zvk));
  for (const char* name : {"S3", "S4", "D4", "Q8", "A4"}) {
    INFO(name);
    CHECK(CountHoms(s, BuiltinGroup(name)) == CountHoms(zvk, BuiltinGroup(name)));
  }
}
