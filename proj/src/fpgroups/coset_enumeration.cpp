#include "braidmon/fpgroups/coset_enumeration.hpp"

#include <deque>

#include "braidmon/error.hpp"

namespace braidmon {

namespace {

constexpr int kNone = -1;

int Column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
int InverseColumn(int col) { return col ^ 1; }

class CosetTable {
 public:
  CosetTable(int generators, int max_cosets) : cols_(2 * generators), max_(max_cosets) { NewCoset(); }

  int size() const { return static_cast<int>(parent_.size()); }
  bool Live(int c) const { return parent_[c] == c; }
  int Get(int c, int col) const { return table_[static_cast<size_t>(c) * cols_ + col]; }
  bool Full() const { return size() >= max_; }
  long defined() const { return defined_; }

  void Define(int c, int col) {
    const int d = NewCoset();
    Set(c, col, d);
    Set(d, InverseColumn(col), c);
  }

  // Traces w from c, defining cosets when `define` is set; on a complete
  // trace records the coincidence or deduction it implies. Returns false if a
  // definition was needed but the table is full.
  bool Scan(int c, const std::vector<int>& word, bool define) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(word.size()) - 1;
    for (;;) {
      while (i <= j && Get(f, Column(word[i])) != kNone) f = Get(f, Column(word[i++]));
      if (i > j) {
        if (f != b) Coincidence(f, b);
        return true;
      }
      while (j >= i && Get(b, InverseColumn(Column(word[j]))) != kNone)
        b = Get(b, InverseColumn(Column(word[j--])));
      if (j < i) {
        Coincidence(f, b);
        return true;
      }
      if (i == j) {
        Set(f, Column(word[i]), b);
        Set(b, InverseColumn(Column(word[i])), f);
        return true;
      }
      if (!define) return true;
      if (Full()) return false;
      Define(f, Column(word[i]));
    }
  }

  // Renumbers live cosets consecutively (order preserved) and returns the
  // new index of old coset `keep`, or of the next live coset after it.
  int Compact(int keep) {
    std::vector<int> remap(size(), kNone);
    int live = 0, keep_new = kNone;
    for (int c = 0; c < size(); ++c) {
      if (c >= keep && keep_new == kNone && Live(c)) keep_new = live;
      if (Live(c)) remap[c] = live++;
    }
    if (keep_new == kNone) keep_new = live;
    std::vector<int> table(static_cast<size_t>(live) * cols_, kNone);
    for (int c = 0; c < size(); ++c) {
      if (!Live(c)) continue;
      for (int x = 0; x < cols_; ++x) {
        const int d = Get(c, x);
        table[static_cast<size_t>(remap[c]) * cols_ + x] = d == kNone ? kNone : remap[d];
      }
    }
    table_ = std::move(table);
    parent_.resize(live);
    for (int c = 0; c < live; ++c) parent_[c] = c;
    return keep_new;
  }

 private:
  int NewCoset() {
    const int c = size();
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, kNone);
    ++defined_;
    return c;
  }

  void Set(int c, int col, int d) { table_[static_cast<size_t>(c) * cols_ + col] = d; }

  int Rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void Merge(int a, int b, std::deque<int>& queue) {
    a = Rep(a);
    b = Rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void Coincidence(int a, int b) {
    std::deque<int> queue;
    Merge(a, b, queue);
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      for (int x = 0; x < cols_; ++x) {
        const int f = Get(e, x);
        if (f == kNone) continue;
        if (Get(f, InverseColumn(x)) == e) Set(f, InverseColumn(x), kNone);
        const int e1 = Rep(e), f1 = Rep(f);
        if (Get(e1, x) != kNone) {
          Merge(f1, Get(e1, x), queue);
        } else if (Get(f1, InverseColumn(x)) != kNone) {
          Merge(e1, Get(f1, InverseColumn(x)), queue);
        } else {
          Set(e1, x, f1);
          Set(f1, InverseColumn(x), e1);
        }
      }
    }
  }

  int cols_;
  int max_;
  long defined_ = 0;
  std::vector<int> table_;
  std::vector<int> parent_;
};

}  // namespace

CosetEnumerationResult EnumerateCosets(const Presentation& p, const std::vector<FreeWord>& subgroup,
                                       int max_cosets) {
  if (max_cosets < 1) throw InputError("maxCosets must be positive");
  const int cols = 2 * p.generators();
  CosetTable table(p.generators(), max_cosets);
  CosetEnumerationResult result;

  long lookaheads = 0;
  auto lookahead = [&](int current) {
    ++lookaheads;
    for (int c = 0; c < table.size(); ++c)
      for (const auto& r : p.relators())
        if (table.Live(c)) table.Scan(c, r.letters(), false);
    return table.Compact(current);
  };

  // Scans with definitions; on a full table runs a lookahead and retries once.
  // Returns the (possibly renumbered) current coset, or -1 when exhausted.
  auto fill = [&](int c, const std::vector<int>& word) -> int {
    if (table.Scan(c, word, true)) return c;
    c = lookahead(c);
    if (c >= table.size()) return c;
    if (!table.Full() && table.Scan(c, word, true)) return c;
    return -1;
  };

  for (const auto& h : subgroup) {
    if (h.rank() > p.generators()) throw InputError("subgroup generator rank exceeds presentation rank");
    if (fill(0, h.letters()) < 0) {
      result.cosets_defined = table.defined();
      return result;
    }
  }

  // A lookahead renumbers the table, so the current coset restarts its scans.
  int c = 0;
  while (c < table.size()) {
    const long before = lookaheads;
    for (const auto& r : p.relators()) {
      if (!table.Live(c)) break;
      c = fill(c, r.letters());
      if (c < 0) {
        result.cosets_defined = table.defined();
        return result;
      }
      if (lookaheads != before) break;
    }
    if (lookaheads != before) continue;
    if (!table.Live(c)) {
      ++c;
      continue;
    }
    for (int x = 0; x < cols; ++x) {
      if (table.Get(c, x) != kNone) continue;
      if (table.Full()) {
        c = lookahead(c);
        if (table.Full()) {
          result.cosets_defined = table.defined();
          return result;
        }
        break;
      }
      table.Define(c, x);
    }
    if (lookaheads == before) ++c;
  }

  table.Compact(0);
  const int index = table.size();
  for (int k = 0; k < p.generators(); ++k) {
    std::vector<int> images(index);
    for (int c = 0; c < index; ++c) {
      const int d = table.Get(c, 2 * k);
      if (d == kNone) throw VerificationError("coset table did not close");
      images[c] = d + 1;
    }
    result.action.push_back(Permutation::FromImages(images));
  }

  // Consistency: relators act trivially, subgroup generators fix coset 1.
  auto trace = [&](int c, const FreeWord& w) {
    for (int l : w.letters()) {
      const Permutation& g = result.action[std::abs(l) - 1];
      c = l > 0 ? g(c) : g.Inverse()(c);
    }
    return c;
  };
  for (int c = 1; c <= index; ++c)
    for (const auto& r : p.relators())
      if (trace(c, r) != c) throw VerificationError("coset table violates a relator");
  for (const auto& h : subgroup)
    if (trace(1, h) != 1) throw VerificationError("coset table moves the subgroup coset");

  result.closed = true;
  result.index = index;
  result.cosets_defined = table.defined();
  return result;
}

}  // namespace braidmon
