#include "braidmon/fpgroups/finite_group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "braidmon/error.hpp"

namespace braidmon {

FiniteGroupTable::FiniteGroupTable(std::string name, std::vector<std::vector<int>> table,
                                   std::vector<std::string> labels)
    : name_(std::move(name)), order_(static_cast<int>(table.size())), labels_(std::move(labels)) {
  const int n = order_;
  if (n == 0) throw InputError("group table is empty");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
    throw InputError("group table label count differs from order");
  table_.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw InputError("group table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw InputError("group table entry out of range");
      table_.push_back(v);
    }
  }

  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = Multiply(e, a) == a && Multiply(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InputError("group table has no identity");

  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (Multiply(a, b) == identity_ && Multiply(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0) throw InputError("group table element without inverse");
  }

  auto assoc = [this](int a, int b, int c) {
    if (Multiply(Multiply(a, b), c) != Multiply(a, Multiply(b, c)))
      throw InputError("group table is not associative");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int s = 0; s < 200000; ++s) assoc(pick(rng), pick(rng), pick(rng));
  }
}

FiniteGroupTable FiniteGroupTable::FromPermutations(std::string name,
                                                    const std::vector<Permutation>& gens) {
  if (gens.empty()) throw InputError("no generating permutations");
  const int degree = gens[0].size();
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Permutation q = p.Then(g);
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  std::vector<Permutation> elems(seen.begin(), seen.end());
  std::map<Permutation, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
  std::vector<std::string> labels;
  for (size_t i = 0; i < elems.size(); ++i) {
    labels.push_back(elems[i].ToCycleString());
    for (size_t j = 0; j < elems.size(); ++j) table[i][j] = index.at(elems[i].Then(elems[j]));
  }
  return FiniteGroupTable(std::move(name), std::move(table), std::move(labels));
}

std::string FiniteGroupTable::Label(int a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

int FiniteGroupTable::Evaluate(const FreeWord& w, const std::vector<int>& images) const {
  int acc = identity_;
  for (int l : w.letters()) {
    const int g = images[std::abs(l) - 1];
    acc = Multiply(acc, l > 0 ? g : inverse_[g]);
  }
  return acc;
}

std::vector<std::vector<int>> FiniteGroupTable::Table() const {
  std::vector<std::vector<int>> out(order_);
  for (int a = 0; a < order_; ++a) out[a].assign(table_.begin() + a * order_, table_.begin() + (a + 1) * order_);
  return out;
}

namespace {

Permutation Cycle(int degree, const std::vector<int>& points) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i + 1;
  for (size_t i = 0; i < points.size(); ++i) images[points[i] - 1] = points[(i + 1) % points.size()];
  return Permutation::FromImages(images);
}

FiniteGroupTable Quaternion() {
  // Elements (sign, unit) with unit 0..3 = 1, i, j, k; index = 4*sign + unit.
  static const int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* kName[4] = {"1", "i", "j", "k"};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  std::vector<std::string> labels;
  for (int a = 0; a < 8; ++a) {
    labels.push_back(std::string(a >= 4 ? "-" : "") + kName[a % 4]);
    for (int b = 0; b < 8; ++b) {
      const int sign = (a / 4 + b / 4 + kSign[a % 4][b % 4]) % 2;
      table[a][b] = 4 * sign + kUnit[a % 4][b % 4];
    }
  }
  return FiniteGroupTable("Q8", std::move(table), std::move(labels));
}

}  // namespace

FiniteGroupTable BuiltinGroup(const std::string& name) {
  if (name == "S3") return FiniteGroupTable::FromPermutations(name, {Cycle(3, {1, 2, 3}), Cycle(3, {1, 2})});
  if (name == "S4")
    return FiniteGroupTable::FromPermutations(name, {Cycle(4, {1, 2, 3, 4}), Cycle(4, {1, 2})});
  if (name == "D4")
    return FiniteGroupTable::FromPermutations(name, {Cycle(4, {1, 2, 3, 4}), Cycle(4, {1, 3})});
  if (name == "A4")
    return FiniteGroupTable::FromPermutations(
        name, {Cycle(4, {1, 2, 3}), Cycle(4, {1, 2}).Then(Cycle(4, {3, 4}))});
  if (name == "Q8") return Quaternion();
  std::string digits;
  if (name.rfind("Z/", 0) == 0) digits = name.substr(2);
  else if (name.rfind("Z", 0) == 0) digits = name.substr(1);
  if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit) && digits.size() <= 2) {
    const int n = std::stoi(digits);
    if (n >= 1 && n <= 12) {
      std::vector<std::vector<int>> table(n, std::vector<int>(n));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
      return FiniteGroupTable("Z/" + std::to_string(n), std::move(table));
    }
  }
  throw InputError("unknown built-in group: " + name);
}

std::vector<std::string> BuiltinGroupNames() {
  std::vector<std::string> names{"S3", "S4", "D4", "Q8", "A4"};
  for (int n = 1; n <= 12; ++n) names.push_back("Z/" + std::to_string(n));
  return names;
}

nlohmann::json FiniteGroupTableToJson(const FiniteGroupTable& g) {
  nlohmann::json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["identity"] = g.identity();
  j["table"] = g.Table();
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

FiniteGroupTable FiniteGroupTableFromJson(const nlohmann::json& j) {
  try {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    FiniteGroupTable g(j.value("name", std::string("G")), std::move(table), std::move(labels));
    if (j.contains("order") && j.at("order").get<int>() != g.order())
      throw InputError("group JSON order does not match its table");
    if (j.contains("identity") && j.at("identity").get<int>() != g.identity())
      throw InputError("group JSON identity does not match its table");
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed group JSON: ") + e.what());
  }
}

}  // namespace braidmon
