#pragma once

#include <vector>

#include "braidmon/words/permutation.hpp"
#include "braidmon/zvk/presentation.hpp"

namespace braidmon {

struct CosetEnumerationResult {
  bool closed = false;  // false means the coset limit was hit
  int index = 0;
  // Right action of each generator on the cosets 1..index (coset 1 is H).
  std::vector<Permutation> action;
  long cosets_defined = 0;
};

// Todd-Coxeter enumeration of the cosets of <subgroup> (HLT strategy with a
// deduction-only lookahead pass whenever the table is full). Never returns an
// index unless the table closed and passed the consistency check.
CosetEnumerationResult EnumerateCosets(const Presentation& p, const std::vector<FreeWord>& subgroup,
                                       int max_cosets);

}  // namespace braidmon
