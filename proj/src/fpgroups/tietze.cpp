#include "braidmon/fpgroups/tietze.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace braidmon {

namespace {

using Letters = std::vector<int>;

Letters Rotate(const Letters& w, size_t k) {
  Letters out(w.begin() + static_cast<long>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(k));
  return out;
}

Letters InverseLetters(const Letters& w) {
  Letters out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

// Least rotation of w or its inverse.
Letters CyclicKey(const Letters& w) {
  Letters best = w;
  const Letters inv = InverseLetters(w);
  for (size_t k = 0; k < w.size(); ++k) {
    best = std::min(best, Rotate(w, k));
    best = std::min(best, Rotate(inv, k));
  }
  return best;
}

bool Cleanup(Presentation& p) {
  std::set<Letters> seen;
  std::vector<FreeWord> kept;
  for (const auto& r : p.relators())
    if (seen.insert(CyclicKey(r.letters())).second) kept.push_back(r);
  if (kept.size() == p.relators().size()) return false;
  p = Presentation(p.generators(), kept, p.labels());
  return true;
}

std::optional<TietzeMove> Eliminate(Presentation& p) {
  const auto& rels = p.relators();
  int best_rel = -1, best_gen = 0;
  for (int k = 1; k <= p.generators(); ++k) {
    for (size_t i = 0; i < rels.size(); ++i) {
      const auto& w = rels[i].letters();
      if (std::count_if(w.begin(), w.end(), [k](int l) { return std::abs(l) == k; }) != 1) continue;
      if (best_rel < 0 || w.size() < rels[best_rel].length()) {
        best_rel = static_cast<int>(i);
        best_gen = k;
      }
    }
  }
  if (best_rel < 0) return std::nullopt;

  // Rotate so the defining letter comes first: g^e * rest == 1.
  const Letters& w = rels[best_rel].letters();
  const size_t pos = static_cast<size_t>(
      std::find_if(w.begin(), w.end(), [&](int l) { return std::abs(l) == best_gen; }) - w.begin());
  const Letters rotated = Rotate(w, pos);
  const int rank = p.generators() - 1;
  auto renumber = [best_gen](int l) {
    const int a = std::abs(l);
    const int b = a > best_gen ? a - 1 : a;
    return l > 0 ? b : -b;
  };
  Letters rest;
  for (size_t j = 1; j < rotated.size(); ++j) rest.push_back(renumber(rotated[j]));
  FreeWord expr(rank, rest);
  expr = rotated[0] > 0 ? expr.Inverse() : expr;

  std::vector<FreeWord> images;
  for (int k = 1; k <= p.generators(); ++k)
    images.push_back(k == best_gen ? expr : FreeWord::Generator(rank, k > best_gen ? k - 1 : k));
  std::vector<FreeWord> relators;
  for (size_t i = 0; i < rels.size(); ++i)
    if (static_cast<int>(i) != best_rel) relators.push_back(rels[i].Substitute(images));
  std::vector<std::string> labels = p.labels();
  const std::string name = labels[best_gen - 1];
  labels.erase(labels.begin() + best_gen - 1);
  p = Presentation(rank, relators, labels);
  return TietzeMove{"eliminate", name + " = " + std::to_string(expr.length()) + "-letter word"};
}

// Finds a rotation of `r` (or its inverse) whose first m > |r|/2 letters occur
// cyclically in `s`, and replaces that occurrence by the inverse of the
// remaining |r| - m letters.
std::optional<Letters> ShortenBy(const Letters& r, const Letters& s) {
  const size_t len = r.size();
  if (len == 0 || s.empty()) return std::nullopt;
  const Letters inv = InverseLetters(r);
  for (size_t m = std::min(len, s.size()); 2 * m > len; --m) {
    for (const Letters* base : {&r, &inv}) {
      for (size_t k = 0; k < len; ++k) {
        const Letters rot = Rotate(*base, k);
        for (size_t start = 0; start < s.size(); ++start) {
          bool match = true;
          for (size_t j = 0; j < m && match; ++j) match = s[(start + j) % s.size()] == rot[j];
          if (!match) continue;
          Letters out = InverseLetters(Letters(rot.begin() + static_cast<long>(m), rot.end()));
          for (size_t j = m; j < s.size(); ++j) out.push_back(s[(start + j) % s.size()]);
          return out;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<TietzeMove> Shorten(Presentation& p) {
  const auto& rels = p.relators();
  for (size_t i = 0; i < rels.size(); ++i)
    for (size_t j = 0; j < rels.size(); ++j) {
      if (i == j) continue;
      auto out = ShortenBy(rels[i].letters(), rels[j].letters());
      if (!out) continue;
      FreeWord shorter = FreeWord(p.generators(), *out).CyclicallyReduced();
      if (shorter.length() >= rels[j].length()) continue;
      std::vector<FreeWord> relators = rels;
      relators[j] = shorter;
      p = Presentation(p.generators(), relators, p.labels());
      return TietzeMove{"shorten", "relator " + std::to_string(j + 1) + " by relator " + std::to_string(i + 1)};
    }
  return std::nullopt;
}

}  // namespace

Presentation TietzeSimplify(const Presentation& input, int effort, const TietzeObserver& observer) {
  Presentation p = input;
  auto report = [&](const TietzeMove& move) {
    if (observer) observer(move, p);
  };
  for (int step = 0; step < effort; ++step) {
    if (Cleanup(p)) {
      report({"cleanup", "dropped duplicate relators"});
      continue;
    }
    if (auto move = Eliminate(p)) {
      report(*move);
      continue;
    }
    if (auto move = Shorten(p)) {
      report(*move);
      continue;
    }
    break;
  }
  return p;
}

}  // namespace braidmon
