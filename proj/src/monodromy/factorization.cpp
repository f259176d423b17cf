#include "braidmon/monodromy/factorization.hpp"

#include <algorithm>
#include <cstdlib>

#include "braidmon/words/garside.hpp"
#include "braidmon/words/text.hpp"

namespace braidmon {

StrandWindow LocalWindow(const BraidWord& beta) {
  if (beta.empty()) return {};
  int lo = beta.strands(), hi = 0;
  for (int l : beta.letters()) {
    lo = std::min(lo, std::abs(l));
    hi = std::max(hi, std::abs(l));
  }
  return {lo, hi + 1};
}

Factorization::Factorization(int strands, std::vector<FactorizationEntry> entries)
    : strands_(strands), entries_(std::move(entries)) {
  if (strands < 1) throw InputError("factorization strand count must be positive");
  for (size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    const std::string where = "factorization entry " + std::to_string(i + 1);
    if (e.tau.strands() != strands) throw InputError(where + ": strand mismatch");
    if (e.alpha.has_value() != e.beta.has_value())
      throw InputError(where + ": alpha and beta must be given together");
    if (!e.alpha) continue;
    if (e.alpha->strands() != strands || e.beta->strands() != strands)
      throw InputError(where + ": strand mismatch in decomposition");
    if (!BraidEqual(Conjugate(*e.beta, *e.alpha), e.tau))
      throw InputError(where + ": alpha^-1 beta alpha differs from tau");
  }
}

Factorization Factorization::FromTaus(int strands, const std::vector<BraidWord>& taus) {
  std::vector<FactorizationEntry> entries;
  for (const auto& t : taus) entries.push_back({t, std::nullopt, std::nullopt});
  return Factorization(strands, std::move(entries));
}

std::vector<BraidWord> Factorization::Taus() const {
  std::vector<BraidWord> taus;
  for (const auto& e : entries_) taus.push_back(e.tau);
  return taus;
}

bool Factorization::HasDecomposition() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.alpha.has_value(); });
}

BraidWord Factorization::DescendingProduct() const {
  BraidWord p(strands_);
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) p = p * it->tau;
  return p;
}

Factorization ConjugateFactorization(const Factorization& f, const BraidWord& c) {
  if (c.strands() != f.strands()) throw InputError("conjugating braid has the wrong strand count");
  std::vector<FactorizationEntry> entries;
  for (const auto& e : f.entries()) {
    FactorizationEntry out{Conjugate(e.tau, c), std::nullopt, e.beta};
    if (e.alpha) out.alpha = *e.alpha * c;
    entries.push_back(std::move(out));
  }
  return Factorization(f.strands(), std::move(entries));
}

FullTwistResult FullTwistCheck(const Factorization& f, const BraidWord& completion) {
  if (completion.strands() != f.strands()) throw InputError("completion braid has the wrong strand count");
  const int n = f.strands();
  const BraidWord total = completion * f.DescendingProduct();
  if (n < 2) return {true, 0};
  const int per_twist = n * (n - 1);
  const int sum = total.ExponentSum();
  if (sum < 0 || sum % per_twist != 0) return {false, 0};
  const int k = sum / per_twist;
  if (!BraidEqual(total, HalfTwist(n).Power(2 * k))) return {false, 0};
  return {true, k};
}

nlohmann::json FactorizationToJson(const Factorization& f) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : f.entries()) {
    nlohmann::json j;
    j["tau"] = FormatBraidWord(e.tau);
    j["alpha"] = e.alpha ? nlohmann::json(FormatBraidWord(*e.alpha)) : nlohmann::json(nullptr);
    j["beta"] = e.beta ? nlohmann::json(FormatBraidWord(*e.beta)) : nlohmann::json(nullptr);
    entries.push_back(std::move(j));
  }
  return {{"strands", f.strands()}, {"entries", std::move(entries)}};
}

Factorization FactorizationFromJson(const nlohmann::json& j) {
  try {
    const int d = j.at("strands").get<int>();
    std::vector<FactorizationEntry> entries;
    for (const auto& e : j.at("entries")) {
      FactorizationEntry out{ParseBraidWord(e.at("tau").get<std::string>(), d), std::nullopt, std::nullopt};
      if (e.contains("alpha") && !e["alpha"].is_null())
        out.alpha = ParseBraidWord(e["alpha"].get<std::string>(), d);
      if (e.contains("beta") && !e["beta"].is_null())
        out.beta = ParseBraidWord(e["beta"].get<std::string>(), d);
      entries.push_back(std::move(out));
    }
    return Factorization(d, std::move(entries));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed factorization JSON: ") + ex.what());
  }
}

}  // namespace braidmon
