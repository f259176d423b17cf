#pragma once

#include <functional>
#include <string>

#include "braidmon/zvk/presentation.hpp"

namespace braidmon {

struct TietzeMove {
  std::string kind;  // "eliminate", "shorten", "cleanup"
  std::string detail;
};

using TietzeObserver = std::function<void(const TietzeMove&, const Presentation&)>;

// Repeatedly: drop trivial and duplicate relators (up to cyclic permutation
// and inversion); eliminate the generator with the shortest defining relator
// (ties by generator index); otherwise shorten a relator by substituting more
// than half of another. Stops after `effort` moves or when nothing applies.
// The observer, if set, sees every intermediate presentation.
Presentation TietzeSimplify(const Presentation& p, int effort = 10000,
                            const TietzeObserver& observer = {});

}  // namespace braidmon
