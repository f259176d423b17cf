#pragma once

#include <vector>

#include "braidmon/words/braid_word.hpp"
#include "braidmon/words/partition.hpp"

namespace braidmon {

// Membership in the mixed braid group B(A): the underlying permutation maps
// each block of A onto itself (blocks are never permuted among themselves).
bool IsInMixed(const BraidWord& b, const Partition& blocks);

// Schreier generators of B(A) over a transversal of the cosets of B(A) in
// B_n, which correspond to the cosets of the Young subgroup of A in S_n.
// Output order is deterministic (BFS over cosets, generators ascending).
std::vector<BraidWord> MixedSubgroupGenerators(int n, const Partition& blocks);

}  // namespace braidmon
