#pragma once

#include "braidmon/monodromy/factorization.hpp"
#include "braidmon/zvk/presentation.hpp"

namespace braidmon {

enum class ZvkMode {
  // g_i^-1 g_i^{tau_j} for 1 <= i < d and every entry j.
  kPlain,
  // (g_i^{alpha_j})^-1 (g_i^{beta_j})^{alpha_j} for i inside the strand window
  // of beta_j, omitting the top strand of each window.
  kDecomposed,
};

// Fundamental group of the affine curve complement on meridians g_1..g_d.
Presentation ZvkPresentation(const Factorization& f, ZvkMode mode);

struct MeridiansAtInfinity {
  FreeWord e;              // (g_d ... g_1)^-1
  FreeWord line;           // e^2 g_2 g_1
  FreeWord exceptional;    // e^2 g_d g_{d-1}
};

MeridiansAtInfinity ComputeMeridiansAtInfinity(int d);

// Quotient by the normal closure of `meridian`.
Presentation ProjectiveQuotient(const Presentation& p, const FreeWord& meridian);

}  // namespace braidmon
