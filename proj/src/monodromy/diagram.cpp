#include "braidmon/monodromy/diagram.hpp"

#include <fstream>
#include <sstream>

#include "braidmon/words/text.hpp"

namespace braidmon {

namespace {

[[noreturn]] void Fail(int line, const std::string& what) {
  throw InputError("diagram line " + std::to_string(line) + ": " + what);
}

// Splits a line into keyword and an optional quoted or bare argument,
// dropping comments.
struct Line {
  std::string keyword;
  std::optional<std::string> argument;
};

Line Tokenize(const std::string& raw, int line_no) {
  std::string text;
  bool quoted = false;
  for (char c : raw) {
    if (c == '"') quoted = !quoted;
    if (c == '#' && !quoted) break;
    text += c;
  }
  if (quoted) Fail(line_no, "unterminated quote");
  std::istringstream in(text);
  Line line;
  in >> line.keyword;
  std::string rest;
  std::getline(in, rest);
  const auto first = rest.find_first_not_of(" \t\r");
  if (first == std::string::npos) return line;
  rest = rest.substr(first, rest.find_last_not_of(" \t\r") - first + 1);
  if (rest.front() == '"') {
    if (rest.size() < 2 || rest.back() != '"') Fail(line_no, "malformed quoted argument");
    line.argument = rest.substr(1, rest.size() - 2);
  } else {
    line.argument = rest;
  }
  return line;
}

}  // namespace

CurveDiagram ParseDiagram(const std::string& text) {
  CurveDiagram diagram;
  struct Pending {
    std::string label;
    std::optional<std::string> transit, half, full;
    int line = 0;
  };
  std::vector<Pending> pending;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const Line line = Tokenize(raw, line_no);
    if (line.keyword.empty()) continue;
    if (!line.argument) Fail(line_no, "'" + line.keyword + "' needs an argument");
    const std::string& arg = *line.argument;
    if (line.keyword == "strands") {
      if (diagram.strands) Fail(line_no, "duplicate strands line");
      try {
        diagram.strands = std::stoi(arg);
      } catch (const std::logic_error&) {
        Fail(line_no, "bad strand count '" + arg + "'");
      }
      if (diagram.strands < 1) Fail(line_no, "strand count must be positive");
    } else if (line.keyword == "point") {
      if (!diagram.strands) Fail(line_no, "'strands' must come before the first point");
      pending.push_back({arg, {}, {}, {}, line_no});
    } else if (line.keyword == "transit" || line.keyword == "local-half" || line.keyword == "local-full") {
      if (pending.empty()) Fail(line_no, "'" + line.keyword + "' outside a point");
      auto& slot = line.keyword == "transit"      ? pending.back().transit
                   : line.keyword == "local-half" ? pending.back().half
                                                  : pending.back().full;
      if (slot) Fail(line_no, "duplicate '" + line.keyword + "'");
      slot = arg;
    } else {
      Fail(line_no, "unknown keyword '" + line.keyword + "'");
    }
  }
  if (!diagram.strands) throw InputError("diagram has no 'strands' line");

  for (size_t i = 0; i < pending.size(); ++i) {
    const Pending& p = pending[i];
    const bool last = i + 1 == pending.size();
    if (!p.full) Fail(p.line, "point '" + p.label + "' has no local-full");
    if (!p.half && !last) Fail(p.line, "point '" + p.label + "' needs local-half");
    try {
      DiagramPoint point{p.label, ParseBraidWord(p.transit.value_or(""), diagram.strands), std::nullopt,
                         ParseBraidWord(*p.full, diagram.strands)};
      if (p.half) point.local_half = ParseBraidWord(*p.half, diagram.strands);
      diagram.points.push_back(std::move(point));
    } catch (const InputError& e) {
      Fail(p.line, e.what());
    }
  }
  return diagram;
}

CurveDiagram LoadDiagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open diagram file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseDiagram(buffer.str());
}

std::vector<BraidWord> DiagramConjugators(const CurveDiagram& diagram) {
  std::vector<BraidWord> conjugators;
  BraidWord prefix(diagram.strands);
  for (const auto& p : diagram.points) {
    if (p.transit.strands() != diagram.strands || p.local_full.strands() != diagram.strands ||
        (p.local_half && p.local_half->strands() != diagram.strands))
      throw InputError("diagram point '" + p.label + "' has the wrong strand count");
    const BraidWord a = prefix * p.transit;
    conjugators.push_back(a);
    if (p.local_half) prefix = a * *p.local_half;
  }
  return conjugators;
}

Factorization CompileDiagram(const CurveDiagram& diagram) {
  const auto conjugators = DiagramConjugators(diagram);
  std::vector<FactorizationEntry> entries;
  for (size_t i = 0; i < diagram.points.size(); ++i) {
    const BraidWord& a = conjugators[i];
    const BraidWord& local = diagram.points[i].local_full;
    entries.push_back({a * local * a.Inverse(), a.Inverse(), local});
  }
  return Factorization(diagram.strands, std::move(entries));
}

}  // namespace braidmon
