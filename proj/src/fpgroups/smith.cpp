#include "braidmon/fpgroups/smith.hpp"

namespace braidmon {

namespace {

// Floor division is not needed: any quotient that leaves a smaller remainder
// drives the pivot search, truncation toward zero suffices.
Integer Quotient(const Integer& a, const Integer& b) { return a / b; }

}  // namespace

SmithForm SmithNormalForm(const IntegerMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  IntegerMatrix d = m;
  IntegerMatrix u = IntegerMatrix::Identity(rows);
  IntegerMatrix v = IntegerMatrix::Identity(cols);

  const int steps = std::min(rows, cols);
  for (int t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      int pr = -1, pc = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pr < 0 || abs(d(i, j)) < abs(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) goto done;
      d.SwapRows(t, pr);
      u.SwapRows(t, pr);
      d.SwapCols(t, pc);
      v.SwapCols(t, pc);

      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = -Quotient(d(i, t), d(t, t));
        d.AddRowMultiple(i, t, q);
        u.AddRowMultiple(i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = -Quotient(d(t, j), d(t, t));
        d.AddColMultiple(j, t, q);
        v.AddColMultiple(j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold a non-multiple into the pivot row and retry.
      int bad_row = -1;
      for (int i = t + 1; i < rows && bad_row < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      d.AddRowMultiple(t, bad_row, 1);
      u.AddRowMultiple(t, bad_row, 1);
    }
    if (d(t, t) < 0) {
      d.NegateRow(t);
      u.NegateRow(t);
    }
  }
done:
  SmithForm out{u, d, v, {}};
  for (int t = 0; t < steps; ++t) out.invariants.push_back(d(t, t));
  return out;
}

std::string AbelianInvariants::ToString() const {
  std::string out;
  auto add = [&out](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (free_rank == 1) add("Z");
  if (free_rank > 1) add("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) add("Z/" + t.get_str());
  return out.empty() ? "0" : out;
}

IntegerMatrix RelationMatrix(const Presentation& p) {
  IntegerMatrix m(static_cast<int>(p.relators().size()), p.generators());
  for (size_t r = 0; r < p.relators().size(); ++r)
    for (int k = 1; k <= p.generators(); ++k) m(static_cast<int>(r), k - 1) = p.relators()[r].ExponentSum(k);
  return m;
}

AbelianInvariants Abelianization(const Presentation& p) {
  const SmithForm snf = SmithNormalForm(RelationMatrix(p));
  AbelianInvariants inv;
  int nonzero = 0;
  for (const auto& d : snf.invariants) {
    if (d != 0) ++nonzero;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.free_rank = p.generators() - nonzero;
  return inv;
}

}  // namespace braidmon
