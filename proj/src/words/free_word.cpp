#include "braidmon/words/free_word.hpp"

#include <cstdlib>

#include "braidmon/error.hpp"

namespace braidmon {

namespace {

void AppendReduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

}  // namespace

FreeWord::FreeWord(int rank) : rank_(rank) {
  if (rank < 0) throw InputError("free group rank must be non-negative");
}

FreeWord::FreeWord(int rank, std::vector<int> letters) : rank_(rank) {
  if (rank < 0) throw InputError("free group rank must be non-negative");
  letters_.reserve(letters.size());
  for (int l : letters) {
    if (l == 0 || std::abs(l) > rank)
      throw InputError("free generator index " + std::to_string(l) + " out of range for rank " +
                       std::to_string(rank));
    AppendReduced(letters_, l);
  }
}

FreeWord FreeWord::Generator(int rank, int k, int exponent) {
  return FreeWord(rank, {k}).Power(exponent);
}

FreeWord FreeWord::Inverse() const {
  FreeWord r(rank_);
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(-*it);
  return r;
}

FreeWord FreeWord::Power(int exponent) const {
  const FreeWord base = exponent < 0 ? Inverse() : *this;
  FreeWord r(rank_);
  for (int e = 0; e < std::abs(exponent); ++e)
    for (int l : base.letters_) AppendReduced(r.letters_, l);
  return r;
}

int FreeWord::ExponentSum(int k) const {
  int s = 0;
  for (int l : letters_)
    if (std::abs(l) == k) s += l > 0 ? 1 : -1;
  return s;
}

int FreeWord::TotalExponentSum() const {
  int s = 0;
  for (int l : letters_) s += l > 0 ? 1 : -1;
  return s;
}

FreeWord FreeWord::CyclicallyReduced() const {
  size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == -letters_[hi - 1]) {
    ++lo;
    --hi;
  }
  FreeWord r(rank_);
  r.letters_.assign(letters_.begin() + lo, letters_.begin() + hi);
  return r;
}

FreeWord FreeWord::Substitute(const std::vector<FreeWord>& images) const {
  if (static_cast<int>(images.size()) != rank_)
    throw InputError("substitution needs one image per generator");
  const int target_rank = images.empty() ? 0 : images.front().rank();
  FreeWord r(target_rank);
  for (int l : letters_) {
    const FreeWord& img = images[std::abs(l) - 1];
    if (img.rank() != target_rank) throw InputError("substitution images have mixed ranks");
    if (l > 0) {
      for (int x : img.letters_) AppendReduced(r.letters_, x);
    } else {
      for (auto it = img.letters_.rbegin(); it != img.letters_.rend(); ++it)
        AppendReduced(r.letters_, -*it);
    }
  }
  return r;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != b.rank()) throw InputError("free word rank mismatch");
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return FreeWord(a.rank(), std::move(letters));
}

FreeWord Conjugate(const FreeWord& w, const FreeWord& u) { return u.Inverse() * w * u; }

FreeWord Commutator(const FreeWord& a, const FreeWord& b) {
  return a * b * a.Inverse() * b.Inverse();
}

FreeWord ActOnFree(const FreeWord& w, const BraidWord& b) {
  if (w.rank() != b.strands())
    throw InputError("free group rank " + std::to_string(w.rank()) + " does not match B_" +
                     std::to_string(b.strands()));
  const int d = w.rank();
  std::vector<FreeWord> images;
  for (int k = 1; k <= d; ++k) images.push_back(FreeWord::Generator(d, k));
  FreeWord result = w;
  for (int letter : b.letters()) {
    const int j = std::abs(letter);
    const FreeWord gj = FreeWord::Generator(d, j);
    const FreeWord gj1 = FreeWord::Generator(d, j + 1);
    std::vector<FreeWord> step = images;
    if (letter > 0) {
      step[j - 1] = gj1;
      step[j] = gj1 * gj * gj1.Inverse();
    } else {
      step[j - 1] = gj.Inverse() * gj1 * gj;
      step[j] = gj;
    }
    result = result.Substitute(step);
  }
  return result;
}

}  // namespace braidmon
