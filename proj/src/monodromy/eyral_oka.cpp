#include "braidmon/monodromy/eyral_oka.hpp"

#include "braidmon/words/text.hpp"

namespace braidmon {

namespace {

BraidWord W(const char* text) { return ParseBraidWord(text, 4); }

}  // namespace

Factorization EyralOkaFactorization() {
  const BraidWord c2 = W("s1 s2 s1^2");
  const BraidWord c3 = W("s2 s1^2 s2 s3");
  const BraidWord beta1 = W("(s1 s2)^4");
  const BraidWord beta2 = W("(s2 s3)^2");
  const BraidWord beta3 = W("(s2 s1)^4");
  return Factorization(4, {
                              {beta1, BraidWord(4), beta1},
                              {c2 * beta2 * c2.Inverse(), c2.Inverse(), beta2},
                              {c3 * beta3 * c3.Inverse(), c3.Inverse(), beta3},
                          });
}

const std::string& EyralOkaDiagramText() {
  static const std::string text = R"(# Affine Eyral-Oka sextic, vertical projection.
# Discriminant points x = -1 (E6), 0 (A2), 1 (E6); base point to the right.
# Transit words come from the real/complex crossings between the points;
# local words from the Puiseux data of each singular point.
strands 4

point E6-minus
  transit    ""
  local-half "(s1 s2)^2"
  local-full "(s1 s2)^4"

point A2
  transit    "s2^-1 s1"
  local-half "s2 s3"
  local-full "(s2 s3)^2"

point E6-plus
  transit    "s1^-1 s2"
  local-full "(s1 s2)^4"
)";
  return text;
}

BraidWord EyralOkaCompletion() { return W("s1^2 s3^2"); }

BraidWord EyralOkaSwap() { return W("(s2 s3 s1)^2"); }

}  // namespace braidmon
