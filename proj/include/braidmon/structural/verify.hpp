#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "braidmon/structural/struct_elem.hpp"
#include "braidmon/zvk/presentation.hpp"

namespace braidmon {

struct StructuralCheck {
  std::string id;  // "i" .. "v"
  std::string description;
  bool passed = false;
  std::string detail;  // offending relation on failure
};

struct StructuralReport {
  std::vector<StructuralCheck> checks;
  bool AllPassed() const;
};

// z = [y, x] g^-6.
StructElem CentralElementZ();

// Images of x, y, w, a, b, g under g -> g, x -> y^-1 a, y -> y x w, a -> b,
// b -> a b, w -> w.
std::vector<StructElem> OuterAutomorphismImages();

// The model's own elements for x, y, w, a, b, g.
std::vector<StructElem> ModelGenerators();

// Homomorphism from G given by images of x, y, w, a, b, g, applied to the
// normal form of p.
StructElem ApplyHomomorphism(const StructElem& p, const std::vector<StructElem>& images);

StructuralReport VerifyStructure();

// <x, y, w, a, b, g | 17 relators>: K, V, the V-action and the g-action.
Presentation StructuralPresentation();

nlohmann::json StructuralReportToJson(const StructuralReport& r);

}  // namespace braidmon
