#include "braidmon/equivalence/equivalence.hpp"

#include <deque>
#include <map>

#include "braidmon/error.hpp"
#include "braidmon/words/mixed.hpp"
#include "braidmon/words/text.hpp"

namespace braidmon {

namespace {

struct IndexOps {
  const FiniteImage* image;
  int Multiply(int a, int b) const { return image->Multiply(a, b); }
  int Inverse(int a) const { return image->Inverse(a); }
};

}  // namespace

TupleClass CanonicalClass(const std::vector<int>& tuple, const FiniteImage& image) {
  for (int x : tuple)
    if (x < 0 || x >= static_cast<int>(image.group().order())) throw InputError("tuple entry outside the group");
  TupleClass best{tuple};
  std::vector<int> conj(tuple.size());
  for (int f : image.subgroup()) {
    // Compare while building so most candidates stop after one entry.
    bool smaller = false, decided = false;
    for (size_t i = 0; i < tuple.size(); ++i) {
      conj[i] = image.Conjugate(tuple[i], f);
      if (!decided && conj[i] != best.representative[i]) {
        decided = true;
        smaller = conj[i] < best.representative[i];
        if (!smaller) break;
      }
    }
    if (smaller) best.representative = conj;
  }
  return best;
}

int HurwitzOrbit::IndexOf(const TupleClass& c) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == c) return static_cast<int>(i);
  return -1;
}

HurwitzOrbit EnumerateHurwitzOrbit(const TupleClass& start, const std::vector<BraidWord>& base_gens,
                                   const FiniteImage& image, size_t cap) {
  const int r = static_cast<int>(start.representative.size());
  for (const auto& g : base_gens)
    if (g.strands() != r) throw InputError("base generator strand count differs from the tuple length");
  const IndexOps ops{&image};
  HurwitzOrbit orbit;
  std::map<TupleClass, int> index;
  std::vector<std::vector<int>> images(base_gens.size());
  orbit.classes.push_back(start);
  index.emplace(start, 0);
  for (size_t q = 0; q < orbit.classes.size(); ++q) {
    for (size_t g = 0; g < base_gens.size(); ++g) {
      const TupleClass next =
          CanonicalClass(ApplyHurwitzBraid(orbit.classes[q].representative, base_gens[g], ops), image);
      auto [it, inserted] = index.emplace(next, static_cast<int>(orbit.classes.size()));
      if (inserted) {
        if (orbit.classes.size() >= cap) throw BudgetExceeded("Hurwitz orbit exceeded " + std::to_string(cap) + " classes");
        orbit.classes.push_back(next);
      }
      images[g].push_back(it->second + 1);
    }
  }
  for (const auto& img : images) orbit.permutations.push_back(Permutation::FromImages(img));
  return orbit;
}

Verdict Distinguish(const Factorization& f1, const Factorization& f2, const Partition& blocks,
                    const std::vector<BraidWord>& base_gens, const DistinguishOptions& options) {
  if (f1.strands() != f2.strands()) throw InputError("factorizations have different strand counts");
  if (f1.size() != f2.size()) throw InputError("factorizations have different lengths");
  if (options.base_blocks) {
    if (options.base_blocks->size() != static_cast<int>(f1.size()))
      throw InputError("base partition size does not match the number of points");
    for (const auto& g : base_gens)
      if (!IsInMixed(g, *options.base_blocks))
        throw InputError("base generator " + FormatBraidWord(g) + " is not in the mixed subgroup");
  }
  auto image = std::make_shared<const FiniteImage>(
      BurauRepresentation(f1.strands(), options.modulus, options.t, options.reverse_strands), blocks,
      options.closure_cap);
  Verdict v;
  v.image = image;
  v.base_gens = base_gens;
  v.first = CanonicalClass(image->ImageTuple(f1), *image);
  v.second = CanonicalClass(image->ImageTuple(f2), *image);
  v.orbit = EnumerateHurwitzOrbit(v.first, base_gens, *image, options.orbit_cap);
  v.distinguished = v.orbit.IndexOf(v.second) < 0;
  v.group_order = image->group().order();
  v.subgroup_order = image->subgroup().size();
  return v;
}

nlohmann::json TupleToJson(const std::vector<int>& tuple, const FiniteImage& image) {
  nlohmann::json out = nlohmann::json::array();
  for (int x : tuple) out.push_back(ModMatrixToJson(image.group()[x]));
  return out;
}

nlohmann::json VerdictToJson(const Verdict& v) {
  const FiniteImage& image = *v.image;
  nlohmann::json j;
  j["outcome"] = v.distinguished ? "distinguished" : "not-distinguished";
  j["conclusive"] = v.distinguished;
  if (!v.distinguished)
    j["note"] = "inconclusive: the classes share an orbit in this finite image; equivalence is not implied";
  const auto& rep = image.representation();
  j["representation"] = {{"strands", rep.strands()},
                         {"modulus", rep.modulus()},
                         {"t", rep.t()},
                         {"reverse_strands", rep.reverse_strands()},
                         {"generators", nlohmann::json::array()}};
  for (const auto& g : rep.generators()) j["representation"]["generators"].push_back(ModMatrixToJson(g));
  j["blocks"] = image.blocks().ToString();
  j["group_order"] = v.group_order;
  j["subgroup_order"] = v.subgroup_order;
  j["base_generators"] = nlohmann::json::array();
  for (const auto& g : v.base_gens) j["base_generators"].push_back(FormatBraidWord(g));
  j["first_class"] = TupleToJson(v.first.representative, image);
  j["second_class"] = TupleToJson(v.second.representative, image);
  j["orbit_size"] = v.orbit.classes.size();
  j["orbit"] = nlohmann::json::array();
  for (const auto& c : v.orbit.classes) j["orbit"].push_back(TupleToJson(c.representative, image));
  j["generator_permutations"] = nlohmann::json::array();
  for (const auto& p : v.orbit.permutations) j["generator_permutations"].push_back(p.ToCycleString());
  const int pos = v.orbit.IndexOf(v.second);
  j["second_in_orbit_at"] = pos < 0 ? nlohmann::json(nullptr) : nlohmann::json(pos + 1);
  return j;
}

}  // namespace braidmon
