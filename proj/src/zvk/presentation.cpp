#include "braidmon/zvk/presentation.hpp"

#include "braidmon/error.hpp"
#include "braidmon/words/text.hpp"

namespace braidmon {

Presentation::Presentation(int generators, std::vector<FreeWord> relators, std::vector<std::string> labels)
    : generators_(generators), labels_(std::move(labels)) {
  if (generators < 0) throw InputError("generator count must be non-negative");
  if (labels_.empty()) {
    for (int k = 1; k <= generators; ++k) labels_.push_back("g" + std::to_string(k));
  } else if (static_cast<int>(labels_.size()) != generators) {
    throw InputError("presentation needs one label per generator");
  }
  for (const auto& r : relators) AddRelator(r);
}

void Presentation::AddRelator(const FreeWord& r) {
  if (r.rank() != generators_)
    throw InputError("relator rank " + std::to_string(r.rank()) + " does not match " +
                     std::to_string(generators_) + " generators");
  FreeWord reduced = r.CyclicallyReduced();
  if (!reduced.empty()) relators_.push_back(std::move(reduced));
}

size_t Presentation::TotalLength() const {
  size_t n = 0;
  for (const auto& r : relators_) n += r.length();
  return n;
}

nlohmann::json PresentationToJson(const Presentation& p) {
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : p.relators()) rels.push_back(FormatFreeWord(r, p.labels()));
  return {{"generators", p.labels()}, {"relators", std::move(rels)}};
}

Presentation PresentationFromJson(const nlohmann::json& j) {
  try {
    auto labels = j.at("generators").get<std::vector<std::string>>();
    const int n = static_cast<int>(labels.size());
    std::vector<FreeWord> rels;
    for (const auto& r : j.at("relators")) rels.push_back(ParseFreeWord(r.get<std::string>(), labels));
    return Presentation(n, std::move(rels), std::move(labels));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed presentation JSON: ") + ex.what());
  }
}

}  // namespace braidmon
