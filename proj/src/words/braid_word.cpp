#include "braidmon/words/braid_word.hpp"

#include <cstdlib>

#include "braidmon/error.hpp"

namespace braidmon {

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw InputError("braid strand count must be positive");
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw InputError("braid strand count must be positive");
  for (int l : letters_) {
    if (l == 0 || std::abs(l) > strands - 1)
      throw InputError("braid generator index " + std::to_string(l) + " out of range for B_" +
                       std::to_string(strands));
  }
}

BraidWord BraidWord::Generator(int strands, int k, int sign) {
  return BraidWord(strands, {sign < 0 ? -k : k});
}

BraidWord BraidWord::Inverse() const {
  BraidWord r(strands_);
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(-*it);
  return r;
}

BraidWord BraidWord::Power(int exponent) const {
  const BraidWord base = exponent < 0 ? Inverse() : *this;
  BraidWord r(strands_);
  for (int e = 0; e < std::abs(exponent); ++e)
    r.letters_.insert(r.letters_.end(), base.letters_.begin(), base.letters_.end());
  return r;
}

BraidWord BraidWord::FreelyReduced() const {
  BraidWord r(strands_);
  for (int l : letters_) {
    if (!r.letters_.empty() && r.letters_.back() == -l)
      r.letters_.pop_back();
    else
      r.letters_.push_back(l);
  }
  return r;
}

int BraidWord::ExponentSum() const {
  int s = 0;
  for (int l : letters_) s += l > 0 ? 1 : -1;
  return s;
}

BraidWord Compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw InputError("cannot compose braids on " + std::to_string(a.strands()) + " and " +
                     std::to_string(b.strands()) + " strands");
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) { return Compose(a, b); }

BraidWord Conjugate(const BraidWord& b, const BraidWord& c) { return c.Inverse() * b * c; }

Permutation UnderlyingPermutation(const BraidWord& b) {
  // pos[s] = current position of the strand that started at s (0-based).
  const int n = b.strands();
  std::vector<int> pos(n), at(n);
  for (int i = 0; i < n; ++i) pos[i] = at[i] = i;
  for (int l : b.letters()) {
    const int k = std::abs(l) - 1;
    std::swap(at[k], at[k + 1]);
    pos[at[k]] = k;
    pos[at[k + 1]] = k + 1;
  }
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = pos[i] + 1;
  return Permutation::FromImages(std::move(images));
}

BraidWord HalfTwist(int n) {
  if (n < 2) throw InputError("half twist needs at least 2 strands");
  std::vector<int> letters;
  for (int top = n - 1; top >= 1; --top)
    for (int k = 1; k <= top; ++k) letters.push_back(k);
  return BraidWord(n, std::move(letters));
}

BraidWord ReverseStrands(const BraidWord& b) {
  std::vector<int> letters;
  letters.reserve(b.length());
  for (int l : b.letters()) letters.push_back(l > 0 ? b.strands() - l : -(b.strands() + l));
  return BraidWord(b.strands(), std::move(letters));
}

}  // namespace braidmon
