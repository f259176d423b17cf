#include "braidmon/zvk/zvk.hpp"

namespace braidmon {

Presentation ZvkPresentation(const Factorization& f, ZvkMode mode) {
  const int d = f.strands();
  Presentation p(d);
  if (mode == ZvkMode::kPlain) {
    for (const auto& e : f.entries()) {
      for (int i = 1; i < d; ++i) {
        const FreeWord g = FreeWord::Generator(d, i);
        p.AddRelator(g.Inverse() * ActOnFree(g, e.tau));
      }
    }
    return p;
  }
  for (size_t j = 0; j < f.size(); ++j) {
    const auto& e = f[j];
    if (!e.alpha || !e.beta)
      throw InputError("entry " + std::to_string(j + 1) + " has no decomposition for decomposed mode");
    const StrandWindow window = LocalWindow(*e.beta);
    for (int i = window.first; i < window.last; ++i) {
      const FreeWord g = FreeWord::Generator(d, i);
      p.AddRelator(ActOnFree(g, *e.alpha).Inverse() * ActOnFree(ActOnFree(g, *e.beta), *e.alpha));
    }
  }
  return p;
}

MeridiansAtInfinity ComputeMeridiansAtInfinity(int d) {
  if (d < 2) throw InputError("meridians at infinity need at least 2 strands");
  FreeWord boundary(d);
  for (int k = d; k >= 1; --k) boundary = boundary * FreeWord::Generator(d, k);
  const FreeWord e = boundary.Inverse();
  const FreeWord e2 = e.Power(2);
  return {e, e2 * FreeWord::Generator(d, 2) * FreeWord::Generator(d, 1),
          e2 * FreeWord::Generator(d, d) * FreeWord::Generator(d, d - 1)};
}

Presentation ProjectiveQuotient(const Presentation& p, const FreeWord& meridian) {
  if (meridian.rank() != p.generators()) throw InputError("meridian rank does not match the presentation");
  Presentation q = p;
  q.AddRelator(meridian);
  return q;
}

}  // namespace braidmon
