#include "braidmon/words/text.hpp"

#include <cctype>
#include <cstdlib>

#include "braidmon/error.hpp"

namespace braidmon {

namespace {

class LetterParser {
 public:
  LetterParser(const std::string& text, char prefix, const std::vector<std::string>* labels = nullptr)
      : text_(text), prefix_(prefix), labels_(labels) {}

  std::vector<int> Parse() {
    SkipSpace();
    size_t end = text_.size();
    while (end > pos_ && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
    if (end == pos_ + 1 && text_[pos_] == '1') return {};
    std::vector<int> out = Sequence();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  std::vector<int> Sequence() {
    std::vector<int> out;
    for (;;) {
      SkipSpace();
      if (pos_ >= text_.size() || text_[pos_] == ')') return out;
      std::vector<int> item;
      if (text_[pos_] == '(') {
        ++pos_;
        item = Sequence();
        SkipSpace();
        if (pos_ >= text_.size() || text_[pos_] != ')') Fail("missing ')'");
        ++pos_;
      } else if (labels_) {
        item = {Label()};
      } else if (text_[pos_] == prefix_) {
        ++pos_;
        const long k = Integer(false);
        if (k <= 0) Fail("generator index must be positive");
        item = {static_cast<int>(k)};
      } else {
        Fail("unexpected '" + std::string(1, text_[pos_]) + "'");
      }
      long exponent = 1;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        exponent = Integer(true);
      }
      const long reps = std::labs(exponent);
      for (long r = 0; r < reps; ++r) {
        if (exponent > 0) {
          out.insert(out.end(), item.begin(), item.end());
        } else {
          for (auto it = item.rbegin(); it != item.rend(); ++it) out.push_back(-*it);
        }
      }
    }
  }

  int Label() {
    const size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) Fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    const std::string name = text_.substr(start, pos_ - start);
    for (size_t k = 0; k < labels_->size(); ++k)
      if ((*labels_)[k] == name) return static_cast<int>(k) + 1;
    pos_ = start;
    Fail("unknown generator '" + name + "'");
  }

  long Integer(bool allow_sign) {
    const size_t start = pos_;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) Fail("expected integer");
    if (pos_ - digits > 6) Fail("integer too large");
    return std::stol(text_.substr(start, pos_ - start));
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw InputError("word syntax error at offset " + std::to_string(pos_) + " in \"" + text_ +
                     "\": " + what);
  }

  const std::string& text_;
  char prefix_;
  const std::vector<std::string>* labels_;
  size_t pos_ = 0;
};

}  // namespace

std::vector<int> ParseLetters(const std::string& text, char prefix) {
  return LetterParser(text, prefix).Parse();
}

BraidWord ParseBraidWord(const std::string& text, int strands) {
  return BraidWord(strands, ParseLetters(text, 's'));
}

std::vector<BraidWord> ParseBraidWordList(const std::string& text, int strands) {
  std::vector<std::string> items;
  if (text.find(',') != std::string::npos) {
    size_t start = 0;
    for (;;) {
      const size_t comma = text.find(',', start);
      items.push_back(text.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else {
    std::string item;
    for (char c : text + " ") {
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!item.empty()) items.push_back(item);
        item.clear();
      } else {
        item += c == '.' ? ' ' : c;
      }
    }
  }
  std::vector<BraidWord> out;
  for (const auto& item : items) {
    if (item.find_first_not_of(" \t\n") == std::string::npos) throw InputError("empty word in list \"" + text + "\"");
    out.push_back(ParseBraidWord(item, strands));
  }
  return out;
}

FreeWord ParseFreeWord(const std::string& text, int rank) {
  return FreeWord(rank, ParseLetters(text, 'g'));
}

FreeWord ParseFreeWord(const std::string& text, const std::vector<std::string>& labels) {
  return FreeWord(static_cast<int>(labels.size()), LetterParser(text, 'g', &labels).Parse());
}

std::string FormatLetters(const std::vector<int>& letters, char prefix) {
  std::string out;
  for (int l : letters) {
    if (!out.empty()) out += ' ';
    out += prefix;
    out += std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

std::string FormatBraidWord(const BraidWord& b) { return FormatLetters(b.letters(), 's'); }
std::string FormatFreeWord(const FreeWord& w) { return FormatLetters(w.letters(), 'g'); }

std::string FormatFreeWord(const FreeWord& w, const std::vector<std::string>& labels) {
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += labels.at(std::abs(l) - 1);
    if (l < 0) out += "^-1";
  }
  return out;
}

}  // namespace braidmon
