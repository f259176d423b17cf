#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "braidmon/equivalence/representation.hpp"
#include "braidmon/words/permutation.hpp"

namespace braidmon {

// Class of a tuple in F^r modulo diagonal conjugation by F_A, stored as its
// lexicographically least representative (by closure index).
struct TupleClass {
  std::vector<int> representative;
  auto operator<=>(const TupleClass&) const = default;
};

TupleClass CanonicalClass(const std::vector<int>& tuple, const FiniteImage& image);

struct HurwitzOrbit {
  std::vector<TupleClass> classes;  // BFS discovery order, start first
  // Per base generator, the induced permutation of the orbit (1-based).
  std::vector<Permutation> permutations;
  int IndexOf(const TupleClass& c) const;  // -1 if absent
};

inline constexpr size_t kDefaultOrbitCap = 1'000'000;

// Each base generator acts as its word of elementary Hurwitz moves.
HurwitzOrbit EnumerateHurwitzOrbit(const TupleClass& start, const std::vector<BraidWord>& base_gens,
                                   const FiniteImage& image, size_t cap = kDefaultOrbitCap);

struct DistinguishOptions {
  std::int64_t modulus = 4;
  std::int64_t t = 3;
  bool reverse_strands = false;
  // When set, every base generator must lie in B(base_blocks).
  std::optional<Partition> base_blocks;
  size_t closure_cap = kDefaultClosureCap;
  size_t orbit_cap = kDefaultOrbitCap;
};

struct Verdict {
  std::shared_ptr<const FiniteImage> image;
  std::vector<BraidWord> base_gens;
  bool distinguished = false;
  TupleClass first;
  TupleClass second;
  HurwitzOrbit orbit;
  size_t group_order = 0;
  size_t subgroup_order = 0;
};

// `distinguished` certifies that no element of B(A_d) x <base_gens> carries
// f1 to f2; `not-distinguished` is inconclusive.
Verdict Distinguish(const Factorization& f1, const Factorization& f2, const Partition& blocks,
                    const std::vector<BraidWord>& base_gens, const DistinguishOptions& options = {});

// Full witness report: every orbit class as matrices and the generator
// permutations as cycle strings.
nlohmann::json VerdictToJson(const Verdict& v);

nlohmann::json TupleToJson(const std::vector<int>& tuple, const FiniteImage& image);

}  // namespace braidmon
