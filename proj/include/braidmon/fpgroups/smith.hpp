#pragma once

#include <string>
#include <vector>

#include "braidmon/fpgroups/integer_matrix.hpp"
#include "braidmon/zvk/presentation.hpp"

namespace braidmon {

// U * m * V == diagonal with U, V unimodular, non-negative diagonal entries
// d_1 | d_2 | ... (zeros last).
struct SmithForm {
  IntegerMatrix u;
  IntegerMatrix diagonal;
  IntegerMatrix v;
  std::vector<Integer> invariants;  // the min(rows, cols) diagonal entries
};

SmithForm SmithNormalForm(const IntegerMatrix& m);

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, in divisibility order

  // "Z + Z/6", "Z^2", "Z/2 + Z/4", or "0" for the trivial group.
  std::string ToString() const;
  bool operator==(const AbelianInvariants&) const = default;
};

// Rows are relators, columns generators, entries exponent sums.
IntegerMatrix RelationMatrix(const Presentation& p);
AbelianInvariants Abelianization(const Presentation& p);

}  // namespace braidmon
