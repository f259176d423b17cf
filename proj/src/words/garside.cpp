#include "braidmon/words/garside.hpp"

#include <cstdlib>

#include "braidmon/error.hpp"

namespace braidmon {

namespace {

using Simple = std::vector<int>;

Simple Identity(int n) {
  Simple s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  return s;
}

bool IsIdentity(const Simple& s) {
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (s[i] != i) return false;
  return true;
}

bool IsDelta(const Simple& s) {
  const int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i)
    if (s[i] != n - 1 - i) return false;
  return true;
}

Simple InverseOf(const Simple& s) {
  Simple r(s.size());
  for (int i = 0; i < static_cast<int>(s.size()); ++i) r[s[i]] = i;
  return r;
}

// Delta * s * Delta^-1.
Simple Flip(const Simple& s) {
  const int n = static_cast<int>(s.size());
  Simple r(n);
  for (int i = 0; i < n; ++i) r[i] = n - 1 - s[n - 1 - i];
  return r;
}

// sigma_k (0-based k swaps positions k, k+1) is a left divisor of s.
bool StartsWith(const Simple& s, int k) { return s[k] > s[k + 1]; }

// Left-weighted normalization of the pair (a, b): moves every generator of
// b's starting set that a can absorb while staying simple.
bool MakeLeftWeighted(Simple& a, Simple& b) {
  const int n = static_cast<int>(a.size());
  bool changed = false;
  for (bool progress = true; progress;) {
    progress = false;
    Simple a_inv = InverseOf(a);
    for (int k = 0; k + 1 < n; ++k) {
      const bool in_finishing = a_inv[k] > a_inv[k + 1];
      if (StartsWith(b, k) && !in_finishing) {
        // a <- a * sigma_k: the strands now at positions k, k+1 swap.
        std::swap(a_inv[k], a_inv[k + 1]);
        a[a_inv[k]] = k;
        a[a_inv[k + 1]] = k + 1;
        // b <- sigma_k^-1 * b.
        std::swap(b[k], b[k + 1]);
        progress = changed = true;
      }
    }
  }
  return changed;
}

}  // namespace

GarsideNormalForm ComputeGarsideNormalForm(const BraidWord& b) {
  const int n = b.strands();
  GarsideNormalForm nf;
  nf.strands = n;
  if (n < 2) return nf;

  // Each sigma_k^-1 is rewritten as Delta^-1 * (Delta sigma_k^-1); moving all
  // the Delta^-1 to the front flips every factor once per later inverse.
  const auto& letters = b.letters();
  std::vector<Simple> factors(letters.size());
  int later_negatives = 0;
  for (size_t idx = letters.size(); idx-- > 0;) {
    const int l = letters[idx];
    const int k = std::abs(l) - 1;
    Simple s = Identity(n);
    if (l > 0) {
      std::swap(s[k], s[k + 1]);
    } else {
      for (int i = 0; i < n; ++i) {
        int p = n - 1 - i;
        if (p == k) p = k + 1;
        else if (p == k + 1) p = k;
        s[i] = p;
      }
    }
    if (later_negatives % 2) s = Flip(s);
    factors[idx] = std::move(s);
    if (l < 0) ++later_negatives;
  }
  nf.delta_power = -later_negatives;

  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i + 1 < factors.size(); ++i)
      if (MakeLeftWeighted(factors[i], factors[i + 1])) changed = true;
  }

  size_t first = 0;
  while (first < factors.size() && IsDelta(factors[first])) ++first;
  nf.delta_power += static_cast<int>(first);
  size_t last = factors.size();
  while (last > first && IsIdentity(factors[last - 1])) --last;
  nf.factors.assign(factors.begin() + first, factors.begin() + last);
  return nf;
}

BraidWord GarsideNormalForm::ToWord() const {
  BraidWord w = strands >= 2 ? HalfTwist(strands).Power(delta_power) : BraidWord(strands);
  for (const Simple& s : factors) {
    // Bubble sort strands into their final positions; each adjacent swap of
    // an inverted pair is one positive crossing.
    std::vector<int> letters;
    std::vector<int> cur = Identity(strands);  // cur[pos] = strand at pos
    for (bool swapped = true; swapped;) {
      swapped = false;
      for (int k = 0; k + 1 < strands; ++k) {
        if (s[cur[k]] > s[cur[k + 1]]) {
          std::swap(cur[k], cur[k + 1]);
          letters.push_back(k + 1);
          swapped = true;
        }
      }
    }
    w = w * BraidWord(strands, std::move(letters));
  }
  return w;
}

bool BraidEqual(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw InputError("braid strand mismatch");
  return ComputeGarsideNormalForm(a) == ComputeGarsideNormalForm(b);
}

bool IsFullTwistPower(const BraidWord& b, int* k) {
  const auto nf = ComputeGarsideNormalForm(b);
  if (!nf.factors.empty() || nf.delta_power < 0 || nf.delta_power % 2 != 0) return false;
  if (b.strands() < 2) {
    if (k) *k = 0;
    return true;
  }
  if (k) *k = nf.delta_power / 2;
  return true;
}

}  // namespace braidmon
