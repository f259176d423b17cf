#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "braidmon/fpgroups/finite_group.hpp"
#include "braidmon/zvk/presentation.hpp"

namespace braidmon {

struct HomSearchOptions {
  // Search-tree nodes visited before BudgetExceeded is thrown.
  std::uint64_t node_budget = 500'000'000;
  // Worker threads splitting the first generator's image (count only).
  int jobs = 1;
};

std::uint64_t CountHoms(const Presentation& p, const FiniteGroupTable& t,
                        const HomSearchOptions& options = {});

// Calls visit(images) for every homomorphism in lexicographic order of the
// image tuple; visit returns false to stop early.
void EnumerateHoms(const Presentation& p, const FiniteGroupTable& t,
                   const std::function<bool(const std::vector<int>&)>& visit,
                   std::uint64_t node_budget = HomSearchOptions{}.node_budget);

// True iff the image of w commutes with every generator image under every
// homomorphism into every test group.
bool CentralInQuotients(const Presentation& p, const FreeWord& w,
                        const std::vector<FiniteGroupTable>& tests,
                        std::uint64_t node_budget = HomSearchOptions{}.node_budget);

}  // namespace braidmon
