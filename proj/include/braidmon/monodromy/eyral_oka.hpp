#pragma once

#include <string>

#include "braidmon/monodromy/diagram.hpp"
#include "braidmon/monodromy/factorization.hpp"

namespace braidmon {

// Braid monodromy of the affine Eyral-Oka sextic (d = 4 strands, r = 3
// points), with the decompositions tau_i = alpha_i^-1 beta_i alpha_i.
Factorization EyralOkaFactorization();

// Text of the bundled diagram (identical to data/eyral_oka.diagram).
const std::string& EyralOkaDiagramText();

// s1^2 s3^2: the two nodes at infinity closing the product to Delta^4.
BraidWord EyralOkaCompletion();

// (s2 s3 s1)^2, which exchanges the strand pairs {1,2} and {3,4}.
BraidWord EyralOkaSwap();

}  // namespace braidmon
