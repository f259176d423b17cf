#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidmon/monodromy/factorization.hpp"

namespace braidmon {

// One discriminant point of a strongly real curve diagram.
//   transit    braid over the open segment from the previous point
//   local_half braid over the upper half circle around the point; it only
//              feeds the conjugators of later points
//   local_full braid over the full loop around the point
struct DiagramPoint {
  std::string label;
  BraidWord transit;
  std::optional<BraidWord> local_half;
  BraidWord local_full;
};

struct CurveDiagram {
  int strands = 0;
  std::vector<DiagramPoint> points;
};

// Line-oriented format, '#' starts a comment outside quotes:
//   strands 4
//   point <label>
//     transit    "<braid word or empty>"
//     local-half "<braid word>"     (optional on the last point)
//     local-full "<braid word>"
CurveDiagram ParseDiagram(const std::string& text);
CurveDiagram LoadDiagram(const std::string& path);

// tau_i = A_i * local_full_i * A_i^-1 with
// A_i = (prod_{j<i} transit_j * local_half_j) * transit_i.
// Entries carry alpha_i = A_i^-1 and beta_i = local_full_i.
Factorization CompileDiagram(const CurveDiagram& diagram);

// The conjugators A_i, in point order.
std::vector<BraidWord> DiagramConjugators(const CurveDiagram& diagram);

}  // namespace braidmon
