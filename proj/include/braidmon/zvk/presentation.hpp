#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "braidmon/words/free_word.hpp"

namespace braidmon {

// Finitely presented group <g_1..g_n | relators>. Relators are stored freely
// and cyclically reduced; trivial relators are dropped.
class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(int generators, std::vector<FreeWord> relators = {},
                        std::vector<std::string> labels = {});

  int generators() const { return generators_; }
  const std::vector<FreeWord>& relators() const { return relators_; }
  // Display names; default g1..gn.
  const std::vector<std::string>& labels() const { return labels_; }

  void AddRelator(const FreeWord& r);
  size_t TotalLength() const;

 private:
  int generators_ = 0;
  std::vector<FreeWord> relators_;
  std::vector<std::string> labels_;
};

// {"generators": ["g1", ...], "relators": ["<word>", ...]} with relators
// written in the generator labels.
nlohmann::json PresentationToJson(const Presentation& p);
Presentation PresentationFromJson(const nlohmann::json& j);

}  // namespace braidmon
