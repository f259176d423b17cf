#include "braidmon/structural/verify.hpp"

#include <functional>

#include "braidmon/words/text.hpp"

namespace braidmon {

namespace {

const std::vector<std::string> kLabels{"x", "y", "w", "a", "b", "g"};

// Relators of K, of V, of the V-action, then of the g-action.
const std::vector<std::string> kKRelators{"w^2", "x w x^-1 w", "y w y^-1 w"};
const std::vector<std::string> kVRelators{"a^2", "b^2", "a b a^-1 b^-1"};
const std::vector<std::string> kVActionRelators{"a^-1 x a x^-1",       "a^-1 y a w^-1 y^-1", "a^-1 w a w^-1",
                                                "b^-1 x b w^-1 x^-1", "b^-1 y b y^-1",      "b^-1 w b w^-1"};
const std::vector<std::string> kGActionRelators{"g x g^-1 y", "g y g^-1 b^-1 x^-1 y^-1", "g w g^-1 w^-1",
                                                "g a g^-1 b^-1", "g b g^-1 b^-1 a^-1"};

std::vector<std::string> Concat(std::initializer_list<const std::vector<std::string>*> parts) {
  std::vector<std::string> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

FreeWord Word(const std::string& text) { return ParseFreeWord(text, kLabels); }

// First relator not sent to the identity, or empty.
std::string FailingRelator(const std::vector<std::string>& relators, const std::vector<StructElem>& images) {
  for (const auto& r : relators)
    if (!EvaluateWord(Word(r), images).IsIdentity()) return r;
  return {};
}

std::vector<StructElem> WithIdentityTail(std::vector<StructElem> images) {
  while (images.size() < kLabels.size()) images.emplace_back();
  return images;
}

StructuralCheck Check(std::string id, std::string description, const std::function<std::string()>& body) {
  const std::string failure = body();
  return {std::move(id), std::move(description), failure.empty(), failure};
}

}  // namespace

bool StructuralReport::AllPassed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<StructElem> ModelGenerators() {
  return {StructElem::X(), StructElem::Y(), StructElem::W(), StructElem::A(), StructElem::B(), StructElem::G()};
}

StructElem CentralElementZ() {
  return Commutator(StructElem::Y(), StructElem::X()) * StructElem::G().Power(-6);
}

std::vector<StructElem> OuterAutomorphismImages() {
  const StructElem x = StructElem::X(), y = StructElem::Y(), w = StructElem::W(), a = StructElem::A(),
                   b = StructElem::B(), g = StructElem::G();
  return {y.Inverse() * a, y * x * w, w, b, a * b, g};
}

StructElem ApplyHomomorphism(const StructElem& p, const std::vector<StructElem>& images) {
  StructElem r;
  for (int l : p.u().letters()) r = r * (l > 0 ? images[l - 1] : images[-l - 1].Inverse());
  if (p.w()) r = r * images[2];
  if (p.a()) r = r * images[3];
  if (p.b()) r = r * images[4];
  return r * images[5].Power(p.k());
}

StructuralReport VerifyStructure() {
  const auto gens = ModelGenerators();
  const StructElem &x = gens[0], &y = gens[1], &w = gens[2], &a = gens[3], &b = gens[4], &g = gens[5];
  StructuralReport report;

  report.checks.push_back(Check("i", "V-action formulas define automorphisms of K", [&]() -> std::string {
    // Conjugation by a (resp. b) on x, y, w, as given by the formulas.
    const std::vector<StructElem> by_a = WithIdentityTail({x, y * w, w});
    const std::vector<StructElem> by_b = WithIdentityTail({x * w, y, w});
    for (const auto* images : {&by_a, &by_b}) {
      const std::string name = images == &by_a ? "a" : "b";
      if (auto bad = FailingRelator(kKRelators, *images); !bad.empty()) return name + " breaks " + bad;
      for (int k = 0; k < 3; ++k) {
        if (ApplyHomomorphism(ApplyHomomorphism(gens[k], *images), *images) != gens[k])
          return name + "-action is not an involution on " + kLabels[k];
        const StructElem& v = images == &by_a ? a : b;
        if (v.Inverse() * gens[k] * v != (*images)[k]) return name + "-action disagrees with the model on " + kLabels[k];
      }
    }
    return {};
  }));

  report.checks.push_back(Check("ii", "g-action formulas define an automorphism of G'", [&]() -> std::string {
    const std::vector<StructElem> fwd = WithIdentityTail({y.Inverse(), y * x * b, w, b, a * b});
    const std::vector<StructElem> back = WithIdentityTail({x * y * a, x.Inverse(), w, a * b, a});
    const auto derived = Concat({&kKRelators, &kVRelators, &kVActionRelators});
    if (auto bad = FailingRelator(derived, fwd); !bad.empty()) return "forward map breaks " + bad;
    if (auto bad = FailingRelator(derived, back); !bad.empty()) return "inverse map breaks " + bad;
    for (int k = 0; k < 5; ++k) {
      if (ApplyHomomorphism(ApplyHomomorphism(gens[k], fwd), back) != gens[k] ||
          ApplyHomomorphism(ApplyHomomorphism(gens[k], back), fwd) != gens[k])
        return "maps are not mutually inverse on " + kLabels[k];
      if (g * gens[k] * g.Inverse() != fwd[k]) return "g-action disagrees with the model on " + kLabels[k];
    }
    return {};
  }));

  report.checks.push_back(Check("iii", "w commutes with x, y, a, b", [&]() -> std::string {
    for (int k : {0, 1, 3, 4})
      if (!Commutator(w, gens[k]).IsIdentity()) return "[w," + kLabels[k] + "] != 1";
    return {};
  }));

  const StructElem z = CentralElementZ();
  report.checks.push_back(Check("iv", "z = [y,x] g^-6 commutes with x, y, a, b, g", [&]() -> std::string {
    if (z * g.Power(6) != Commutator(y, x)) return "z g^6 != [y,x]";
    for (int k : {0, 1, 2, 3, 4, 5})
      if (!Commutator(z, gens[k]).IsIdentity()) return "[z," + kLabels[k] + "] != 1";
    return {};
  }));

  report.checks.push_back(Check("v", "g->g, x->y^-1 a, y->y x w, a->b, b->a b, w->w is an endomorphism sending z to z w",
                                [&]() -> std::string {
                                  const auto phi = OuterAutomorphismImages();
                                  const auto all = Concat({&kKRelators, &kVRelators, &kVActionRelators, &kGActionRelators});
                                  if (auto bad = FailingRelator(all, phi); !bad.empty()) return "breaks " + bad;
                                  if (ApplyHomomorphism(z, phi) != z * w) return "image of z is not z w";
                                  return {};
                                }));
  return report;
}

Presentation StructuralPresentation() {
  std::vector<FreeWord> relators;
  for (const auto& r : Concat({&kKRelators, &kVRelators, &kVActionRelators, &kGActionRelators}))
    relators.push_back(Word(r));
  return Presentation(static_cast<int>(kLabels.size()), relators, kLabels);
}

nlohmann::json StructuralReportToJson(const StructuralReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j{{"id", c.id}, {"description", c.description}, {"passed", c.passed}};
    if (!c.passed) j["failure"] = c.detail;
    checks.push_back(j);
  }
  return {{"checks", checks}, {"all_passed", r.AllPassed()}};
}

}  // namespace braidmon
