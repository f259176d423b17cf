#include "braidmon/cli/commands.hpp"

#include <gmp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include "braidmon/burau/affine_symmetry.hpp"
#include "braidmon/burau/burau.hpp"
#include "braidmon/burau/closure.hpp"
#include "braidmon/equivalence/equivalence.hpp"
#include "braidmon/error.hpp"
#include "braidmon/fpgroups/homs.hpp"
#include "braidmon/fpgroups/smith.hpp"
#include "braidmon/fpgroups/tietze.hpp"
#include "braidmon/monodromy/diagram.hpp"
#include "braidmon/monodromy/eyral_oka.hpp"
#include "braidmon/structural/verify.hpp"
#include "braidmon/words/garside.hpp"
#include "braidmon/words/mixed.hpp"
#include "braidmon/words/text.hpp"
#include "braidmon/zvk/zvk.hpp"

#ifndef BRAIDMON_VERSION
#define BRAIDMON_VERSION "0.0.0"
#endif

namespace braidmon::cli {

namespace {

using nlohmann::json;

const char* const kEyralOka = "eyral-oka";

// Thrown by Session::Stage after the failure has been recorded.
struct Aborted {};

class Session {
 public:
  Session(const std::string& command, const Options& options) : options_(options) {
    report_["command"] = command;
    report_["inputs"] = json::object();
    report_["outputs"] = json::object();
    report_["timing"] = json::object();
    report_["versions"] = {{"braidmon", BRAIDMON_VERSION},
                           {"gmp", gmp_version},
                           {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                                 std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                                 std::to_string(NLOHMANN_JSON_VERSION_PATCH)}};
    start_ = Clock::now();
  }

  json& inputs() { return report_["inputs"]; }
  json& outputs() { return report_["outputs"]; }

  // Runs f(target); any exception is recorded under `name` and aborts the run.
  template <typename F>
  void Stage(const std::string& name, json& target, F&& f) {
    const auto begin = Clock::now();
    try {
      f(target);
    } catch (const VerificationError& e) {
      Fail(name, "verification", e.what(), kExitVerification);
    } catch (const BudgetExceeded& e) {
      Fail(name, "budget", e.what(), kExitBudget);
    } catch (const InputError& e) {
      Fail(name, "input", e.what(), kExitInput);
    } catch (const nlohmann::json::exception& e) {
      Fail(name, "input", e.what(), kExitInput);
    } catch (const std::exception& e) {
      Fail(name, "internal", e.what(), kExitVerification);
    }
    report_["timing"]["stages_ms"][name] = Milliseconds(begin);
  }

  RunResult Finish() {
    report_["timing"]["total_ms"] = Milliseconds(start_);
    if (!options_.timing) report_.erase("timing");
    return {std::move(report_), exit_code_};
  }

 private:
  using Clock = std::chrono::steady_clock;

  static double Milliseconds(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
  }

  [[noreturn]] void Fail(const std::string& stage, const std::string& kind, const std::string& message, int code) {
    report_["error"] = {{"stage", stage}, {"kind", kind}, {"message", message}};
    exit_code_ = code;
    throw Aborted{};
  }

  const Options& options_;
  json report_;
  int exit_code_ = kExitOk;
  Clock::time_point start_;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json ReadJsonFile(const std::string& path) {
  try {
    return json::parse(ReadFile(path));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// A factorization with where it came from.
struct CurveInput {
  std::string source;
  bool eyral_oka = false;
  Factorization f;
  std::optional<CurveDiagram> diagram;
  std::optional<BraidWord> completion;
};

Factorization LoadFactorization(const std::string& diagram, const std::string& factorization,
                                std::optional<CurveDiagram>* parsed = nullptr) {
  if (!diagram.empty()) {
    CurveDiagram d = LoadDiagram(diagram);
    Factorization f = CompileDiagram(d);
    if (parsed) *parsed = std::move(d);
    return f;
  }
  return FactorizationFromJson(ReadJsonFile(factorization));
}

CurveInput LoadCurve(const Options& o) {
  const int given = !o.curve.empty() + !o.diagram.empty() + !o.factorization.empty();
  if (given > 1) throw InputError("give at most one of --curve, --diagram, --factorization");
  CurveInput in;
  if (!o.diagram.empty() || !o.factorization.empty()) {
    in.source = !o.diagram.empty() ? "diagram:" + o.diagram : "factorization:" + o.factorization;
    in.f = LoadFactorization(o.diagram, o.factorization, &in.diagram);
  } else {
    if (!o.curve.empty() && o.curve != kEyralOka) throw InputError("unknown curve '" + o.curve + "'");
    in.source = std::string("curve:") + kEyralOka;
    in.eyral_oka = true;
    in.f = EyralOkaFactorization();
    in.diagram = ParseDiagram(EyralOkaDiagramText());
    in.completion = EyralOkaCompletion();
  }
  if (!o.completion.empty()) in.completion = ParseBraidWord(o.completion, in.f.strands());
  return in;
}

json WordsToJson(const std::vector<BraidWord>& words) {
  json out = json::array();
  for (const auto& w : words) out.push_back(FormatBraidWord(w));
  return out;
}

json AbelianToJson(const AbelianInvariants& a) {
  json torsion = json::array();
  for (const auto& t : a.torsion) torsion.push_back(t.get_str());
  return {{"invariants", a.ToString()}, {"free_rank", a.free_rank}, {"torsion", torsion}};
}

json PresentationSummary(const Presentation& p) {
  json j = PresentationToJson(p);
  j["generator_count"] = p.generators();
  j["relator_count"] = p.relators().size();
  j["total_length"] = p.TotalLength();
  return j;
}

std::vector<FiniteGroupTable> TestGroups(const Options& o, const std::vector<std::string>& fallback) {
  std::vector<FiniteGroupTable> out;
  const auto& names = o.homs.empty() && o.group_files.empty() ? fallback : o.homs;
  for (const auto& name : names) out.push_back(BuiltinGroup(name));
  for (const auto& path : o.group_files) out.push_back(FiniteGroupTableFromJson(ReadJsonFile(path)));
  return out;
}

json HomCounts(const Presentation& p, const std::vector<FiniteGroupTable>& groups, const Options& o) {
  json out = json::object();
  const HomSearchOptions search{o.hom_budget, o.jobs};
  for (const auto& g : groups) out[g.name()] = CountHoms(p, g, search);
  return out;
}

ZvkMode ModeFor(const Options& o, const Factorization& f) {
  if (o.mode.empty()) return f.HasDecomposition() ? ZvkMode::kDecomposed : ZvkMode::kPlain;
  if (o.mode == "plain") return ZvkMode::kPlain;
  if (o.mode == "decomposed") return ZvkMode::kDecomposed;
  throw InputError("unknown --mode '" + o.mode + "' (plain or decomposed)");
}

Presentation QuotientFor(const std::string& which, const Presentation& p) {
  const MeridiansAtInfinity m = ComputeMeridiansAtInfinity(p.generators());
  if (which == "line") return ProjectiveQuotient(p, m.line);
  if (which == "exceptional") return ProjectiveQuotient(p, m.exceptional);
  throw InputError("unknown --quotient '" + which + "' (line or exceptional)");
}

bool ReverseStrands(const Options& o, const CurveInput* in) {
  if (o.reverse_strands) return *o.reverse_strands;
  return in && in->eyral_oka;
}

Partition BlocksFor(const Options& o, const CurveInput& in) {
  if (!o.blocks.empty()) return Partition::Parse(o.blocks, in.f.strands());
  if (in.eyral_oka) return Partition::Parse("1,2|3,4", 4);
  return Partition::Total(in.f.strands());
}

std::optional<Partition> BaseBlocksFor(const Options& o, const CurveInput& in) {
  if (!o.base_blocks.empty()) return Partition::Parse(o.base_blocks, static_cast<int>(in.f.size()));
  // E6, A2, E6: the outer points are interchangeable.
  if (in.eyral_oka) return Partition::Parse("1,3|2", 3);
  return std::nullopt;
}

// Base generators act on r-tuples, r = number of entries. A plain
// whitespace list such as "s1^-2 s2^-2 s1 s2 s1^-1" is grouped greedily into
// the shortest words lying in B(base blocks) when those blocks are known.
std::vector<BraidWord> BaseGensFor(const Options& o, const CurveInput& in) {
  const int r = static_cast<int>(in.f.size());
  const std::string text = !o.base_gens.empty() ? o.base_gens : in.eyral_oka ? "s1^-2, s2^-2, s1 s2 s1^-1" : "";
  if (text.empty()) throw InputError("--base-gens is required for this curve");
  const std::optional<Partition> blocks = BaseBlocksFor(o, in);
  if (!blocks || text.find_first_of(",.") != std::string::npos) return ParseBraidWordList(text, r);
  std::vector<BraidWord> out;
  BraidWord current(r);
  for (const auto& token : ParseBraidWordList(text, r)) {
    current = current * token;
    if (IsInMixed(current, *blocks)) {
      out.push_back(current);
      current = BraidWord(r);
    }
  }
  if (!current.empty())
    throw InputError("trailing base generator " + FormatBraidWord(current) + " is not in B(" + blocks->ToString() + ")");
  return out;
}

// The second factorization for distinguish: a file, a conjugate of the
// first, or for the Eyral-Oka curve its conjugate by the swap braid.
std::pair<Factorization, std::string> SecondFor(const Options& o, const CurveInput& in) {
  const int given = !o.second_diagram.empty() + !o.second_factorization.empty() + !o.conjugate_by.empty();
  if (given > 1) throw InputError("give at most one of --second-diagram, --second-factorization, --conjugate-by");
  if (!o.second_diagram.empty()) return {LoadFactorization(o.second_diagram, ""), "diagram:" + o.second_diagram};
  if (!o.second_factorization.empty())
    return {LoadFactorization("", o.second_factorization), "factorization:" + o.second_factorization};
  BraidWord c;
  if (!o.conjugate_by.empty()) {
    c = ParseBraidWord(o.conjugate_by, in.f.strands());
  } else if (in.eyral_oka) {
    c = EyralOkaSwap();
  } else {
    throw InputError("distinguish needs --second-diagram, --second-factorization or --conjugate-by");
  }
  return {ConjugateFactorization(in.f, c), "first conjugated by " + FormatBraidWord(c)};
}

DistinguishOptions DistinguishOptionsFor(const Options& o, const CurveInput& in, std::int64_t modulus,
                                         std::int64_t t) {
  DistinguishOptions d;
  d.modulus = modulus;
  d.t = t;
  d.reverse_strands = ReverseStrands(o, &in);
  d.base_blocks = BaseBlocksFor(o, in);
  d.closure_cap = o.closure_cap;
  d.orbit_cap = o.orbit_cap;
  return d;
}

std::vector<std::pair<std::int64_t, std::int64_t>> ParseScan(const std::string& text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const size_t colon = item.find(':');
    if (colon == std::string::npos) throw InputError("--scan entries are modulus:t, got '" + item + "'");
    try {
      out.emplace_back(std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
    } catch (const std::logic_error&) {
      throw InputError("--scan entries are modulus:t, got '" + item + "'");
    }
  }
  if (out.empty()) throw InputError("--scan is empty");
  return out;
}

json InputsJson(const Options& o) {
  json j = {{"curve", o.curve},
            {"diagram", o.diagram},
            {"factorization", o.factorization},
            {"completion", o.completion},
            {"mode", o.mode},
            {"simplify", o.simplify},
            {"quotient", o.quotient},
            {"presentation", o.presentation},
            {"homs", o.homs},
            {"group_files", o.group_files},
            {"strands", o.strands},
            {"modulus", o.modulus},
            {"t", o.t},
            {"closure", o.closure},
            {"word", o.word},
            {"reverse_strands", o.reverse_strands ? json(*o.reverse_strands) : json(nullptr)},
            {"blocks", o.blocks},
            {"base_gens", o.base_gens},
            {"base_blocks", o.base_blocks},
            {"conjugate_by", o.conjugate_by},
            {"second_diagram", o.second_diagram},
            {"second_factorization", o.second_factorization},
            {"scan", o.scan},
            {"closure_cap", o.closure_cap},
            {"orbit_cap", o.orbit_cap},
            {"hom_budget", o.hom_budget},
            {"jobs", o.jobs},
            {"skip", o.skip}};
  return j;
}

// Stage bodies shared by the single commands and the pipeline.

void DiagramStage(const CurveInput& in, json& out) {
  out["source"] = in.source;
  out["strands"] = in.f.strands();
  out["points"] = in.f.size();
  out["factorization"] = FactorizationToJson(in.f);
  if (!in.diagram) return;
  json labels = json::array();
  for (const auto& p : in.diagram->points) labels.push_back(p.label);
  out["point_labels"] = labels;
  out["conjugators"] = WordsToJson(DiagramConjugators(*in.diagram));
  if (in.eyral_oka) {
    // The bundled diagram must compile to the reference factorization.
    const Factorization compiled = CompileDiagram(*in.diagram);
    bool agrees = compiled.size() == in.f.size();
    for (size_t i = 0; agrees && i < compiled.size(); ++i) agrees = BraidEqual(compiled[i].tau, in.f[i].tau);
    out["diagram_matches_reference"] = agrees;
    if (!agrees) throw VerificationError("bundled diagram does not compile to the reference factorization");
  }
}

void FullTwistStage(const CurveInput& in, json& out) {
  if (!in.completion) {
    out["checked"] = false;
    out["note"] = "no completion braid given";
    return;
  }
  const FullTwistResult r = FullTwistCheck(in.f, *in.completion);
  out["checked"] = true;
  out["completion"] = FormatBraidWord(*in.completion);
  out["product_exponent_sum"] = in.f.DescendingProduct().ExponentSum();
  out["holds"] = r.holds;
  if (r.holds) out["k"] = r.k;
  if (!r.holds) throw VerificationError("completion * (tau_r ... tau_1) is not a power of Delta^2");
}

Presentation ZvkStage(const Options& o, const CurveInput& in, json& out) {
  const ZvkMode mode = ModeFor(o, in.f);
  Presentation p = ZvkPresentation(in.f, mode);
  out["mode"] = mode == ZvkMode::kPlain ? "plain" : "decomposed";
  out["presentation"] = PresentationSummary(p);
  if (o.simplify) {
    int moves = 0;
    const Presentation s = TietzeSimplify(p, 10000, [&](const TietzeMove&, const Presentation&) { ++moves; });
    out["simplified"] = PresentationSummary(s);
    out["simplified"]["moves"] = moves;
  }
  return p;
}

void AbelianizationStage(const Presentation& p, const std::vector<FiniteGroupTable>& groups, const Options& o,
                         json& out) {
  out = AbelianToJson(Abelianization(p));
  if (!groups.empty()) out["hom_counts"] = HomCounts(p, groups, o);
}

void QuotientsStage(const Presentation& p, const std::vector<FiniteGroupTable>& groups, const Options& o,
                    json& out) {
  const MeridiansAtInfinity m = ComputeMeridiansAtInfinity(p.generators());
  out["meridians"] = {
      {"e", {{"word", FormatFreeWord(m.e)}, {"abelianized", m.e.TotalExponentSum()}}},
      {"line", {{"word", FormatFreeWord(m.line)}, {"abelianized", m.line.TotalExponentSum()}}},
      {"exceptional", {{"word", FormatFreeWord(m.exceptional)}, {"abelianized", m.exceptional.TotalExponentSum()}}}};
  json counts[2];
  const std::pair<const char*, FreeWord> which[2] = {{"line", m.line}, {"exceptional", m.exceptional}};
  for (int k = 0; k < 2; ++k) {
    const Presentation q = ProjectiveQuotient(p, which[k].second);
    json& j = out["quotients"][which[k].first];
    j["generator_count"] = q.generators();
    j["relator_count"] = q.relators().size();
    j["abelianization"] = AbelianToJson(Abelianization(q));
    j["hom_counts"] = counts[k] = HomCounts(q, groups, o);
  }
  out["abelianizations_equal"] =
      out["quotients"]["line"]["abelianization"] == out["quotients"]["exceptional"]["abelianization"];
  out["hom_counts_equal"] = counts[0] == counts[1];
}

void StructuralStage(json& out) {
  const StructuralReport r = VerifyStructure();
  out = StructuralReportToJson(r);
  out["all_passed"] = r.AllPassed();
  if (!r.AllPassed()) throw VerificationError("structural checks failed");
}

void IdentityStage(json& out) {
  const QuadraticPoly h = AffineEquation();
  const bool holds = PolynomialIdentityCheck();
  out["equation"] = h.ToString();
  out["substitution"] = "y -> -y + (x^2 - 1)/4";
  out["ring"] = "Q[x,y][a]/(a^2 - 3)";
  out["reflected"] = AffineReflection(h).ToString();
  out["conjugate"] = h.NegateA().ToString();
  out["holds"] = holds;
  if (!holds) throw VerificationError("h_a(x, -y + (x^2-1)/4) != h_{-a}(x, y)");
}

json ImageJson(const FiniteImage& image) {
  const BurauRepresentation& rep = image.representation();
  json gens = json::array();
  for (const auto& g : rep.generators()) gens.push_back(ModMatrixToJson(g));
  return {{"strands", rep.strands()},
          {"modulus", rep.modulus()},
          {"t", rep.t()},
          {"reverse_strands", rep.reverse_strands()},
          {"generators", gens},
          {"blocks", image.blocks().ToString()},
          {"group_order", image.group().order()},
          {"closure_layers", image.group().layers()},
          {"subgroup_order", image.subgroup().size()}};
}

void OrbitStage(const FiniteImage& image, const CurveInput& in, const std::vector<BraidWord>& base_gens,
                const Options& o, json& out) {
  const std::optional<Partition> base_blocks = BaseBlocksFor(o, in);
  if (base_blocks)
    for (const auto& g : base_gens)
      if (!IsInMixed(g, *base_blocks))
        throw InputError("base generator " + FormatBraidWord(g) + " is not in B(" + base_blocks->ToString() + ")");
  const std::vector<int> tuple = image.ImageTuple(in.f);
  const HurwitzOrbit orbit = EnumerateHurwitzOrbit(CanonicalClass(tuple, image), base_gens, image, o.orbit_cap);
  out["base_generators"] = WordsToJson(base_gens);
  out["image"] = TupleToJson(tuple, image);
  out["orbit_size"] = orbit.classes.size();
  json classes = json::array();
  for (const auto& c : orbit.classes) classes.push_back(TupleToJson(c.representative, image));
  out["orbit"] = classes;
  json perms = json::array();
  for (size_t g = 0; g < orbit.permutations.size(); ++g)
    perms.push_back({{"generator", FormatBraidWord(base_gens[g])},
                     {"cycles", orbit.permutations[g].ToCycleString()},
                     {"cycle_type", orbit.permutations[g].CycleType()}});
  out["generator_permutations"] = perms;
}

}  // namespace

const std::vector<std::string>& CommandNames() {
  static const std::vector<std::string> names = {"diagram", "zvk", "abelianize", "burau", "orbit",
                                                 "distinguish", "verify-structure", "verify-identity",
                                                 "pipeline"};
  return names;
}

const std::vector<std::string>& PipelineStages() {
  static const std::vector<std::string> stages = {"diagram", "full-twist", "zvk", "abelianization", "quotients",
                                                  "structural", "burau", "orbit", "equivalence"};
  return stages;
}

RunResult Run(const std::string& command, const Options& o) {
  Session s(command, o);
  s.inputs() = InputsJson(o);
  json& out = s.outputs();
  try {
    if (command == "diagram") {
      CurveInput in;
      s.Stage("input", out, [&](json&) { in = LoadCurve(o); });
      s.Stage("diagram", out, [&](json& j) { DiagramStage(in, j); });
      s.Stage("full-twist", out["full_twist"], [&](json& j) { FullTwistStage(in, j); });
    } else if (command == "zvk") {
      CurveInput in;
      s.Stage("input", out, [&](json&) { in = LoadCurve(o); });
      s.Stage("zvk", out, [&](json& j) {
        const Presentation p = ZvkStage(o, in, j);
        if (!o.quotient.empty()) j["quotient"] = {{"which", o.quotient}, {"presentation", PresentationSummary(QuotientFor(o.quotient, p))}};
      });
    } else if (command == "abelianize") {
      Presentation p;
      s.Stage("input", out, [&](json& j) {
        if (!o.presentation.empty()) {
          if (!o.curve.empty() || !o.diagram.empty() || !o.factorization.empty())
            throw InputError("give either --presentation or a curve, not both");
          p = PresentationFromJson(ReadJsonFile(o.presentation));
          j["source"] = "presentation:" + o.presentation;
        } else {
          const CurveInput in = LoadCurve(o);
          p = ZvkPresentation(in.f, ModeFor(o, in.f));
          j["source"] = in.source;
        }
        if (!o.quotient.empty()) p = QuotientFor(o.quotient, p);
        if (o.simplify) p = TietzeSimplify(p);
        j["presentation"] = PresentationSummary(p);
      });
      s.Stage("abelianize", out, [&](json& j) {
        json a;
        AbelianizationStage(p, TestGroups(o, {}), o, a);
        j.update(a);
      });
    } else if (command == "burau") {
      s.Stage("burau", out, [&](json& j) {
        const BurauRepresentation rep(o.strands, o.modulus, o.t, o.reverse_strands.value_or(false));
        json laurent = json::array();
        for (const auto& m : ReducedBurau(o.strands)) laurent.push_back(m.ToString());
        json gens = json::array();
        for (const auto& g : rep.generators()) gens.push_back(ModMatrixToJson(g));
        j["strands"] = o.strands;
        j["modulus"] = o.modulus;
        j["t"] = o.t;
        j["reverse_strands"] = rep.reverse_strands();
        j["laurent_generators"] = laurent;
        j["generators"] = gens;
        if (!o.word.empty()) {
          const BraidWord w = ParseBraidWord(o.word, o.strands);
          j["word"] = {{"word", FormatBraidWord(w)}, {"image", ModMatrixToJson(rep.Apply(w))}};
        }
        if (o.closure) {
          const FiniteMatrixGroup g = Closure(rep.generators(), o.closure_cap);
          j["closure"] = {{"order", g.order()}, {"layers", g.layers()}};
          if (!o.blocks.empty()) {
            const FiniteImage image(rep, Partition::Parse(o.blocks, o.strands), o.closure_cap);
            j["closure"]["blocks"] = image.blocks().ToString();
            j["closure"]["subgroup_order"] = image.subgroup().size();
          }
        }
      });
    } else if (command == "orbit") {
      CurveInput in;
      std::unique_ptr<FiniteImage> image;
      std::vector<BraidWord> base_gens;
      s.Stage("input", out, [&](json&) {
        in = LoadCurve(o);
        base_gens = BaseGensFor(o, in);
      });
      s.Stage("burau", out["representation"], [&](json& j) {
        image = std::make_unique<FiniteImage>(BurauRepresentation(in.f.strands(), o.modulus, o.t, ReverseStrands(o, &in)),
                                              BlocksFor(o, in), o.closure_cap);
        j = ImageJson(*image);
      });
      s.Stage("orbit", out, [&](json& j) { OrbitStage(*image, in, base_gens, o, j); });
    } else if (command == "distinguish") {
      CurveInput in;
      Factorization second;
      std::vector<BraidWord> base_gens;
      s.Stage("input", out, [&](json& j) {
        in = LoadCurve(o);
        base_gens = BaseGensFor(o, in);
        auto [f2, label] = SecondFor(o, in);
        second = std::move(f2);
        j["first"] = in.source;
        j["second"] = label;
      });
      s.Stage("equivalence", out, [&](json& j) {
        std::vector<std::pair<std::int64_t, std::int64_t>> specs{{o.modulus, o.t}};
        if (!o.scan.empty()) specs = ParseScan(o.scan);
        json scan = json::array();
        json chosen;
        for (const auto& [m, t] : specs) {
          const Verdict v =
              Distinguish(in.f, second, BlocksFor(o, in), base_gens, DistinguishOptionsFor(o, in, m, t));
          json vj = VerdictToJson(v);
          scan.push_back({{"modulus", m}, {"t", t}, {"outcome", vj["outcome"]}, {"group_order", v.group_order}});
          if (chosen.is_null() || (v.distinguished && chosen["outcome"] != "distinguished")) chosen = std::move(vj);
        }
        if (!o.scan.empty()) j["scan"] = scan;
        j["verdict"] = chosen;
      });
    } else if (command == "verify-structure") {
      s.Stage("structural", out, [&](json& j) { StructuralStage(j); });
    } else if (command == "verify-identity") {
      s.Stage("identity", out, [&](json& j) { IdentityStage(j); });
    } else if (command == "pipeline") {
      for (const auto& name : o.skip)
        if (std::find(PipelineStages().begin(), PipelineStages().end(), name) == PipelineStages().end() ||
            name == "diagram")
          s.Stage("input", out, [&](json&) { throw InputError("cannot skip stage '" + name + "'"); });
      auto skipped = [&](const std::string& name) {
        return std::find(o.skip.begin(), o.skip.end(), name) != o.skip.end();
      };
      CurveInput in;
      Presentation p;
      std::unique_ptr<FiniteImage> image;
      std::vector<BraidWord> base_gens;
      std::vector<FiniteGroupTable> groups;
      s.Stage("input", out, [&](json&) {
        in = LoadCurve(o);
        groups = TestGroups(o, {"S3", "S4"});
        if (!skipped("orbit") || !skipped("equivalence")) base_gens = BaseGensFor(o, in);
      });
      s.Stage("diagram", out["diagram"], [&](json& j) { DiagramStage(in, j); });
      if (!skipped("full-twist")) s.Stage("full-twist", out["full_twist"], [&](json& j) { FullTwistStage(in, j); });
      const bool need_p = !skipped("zvk") || !skipped("abelianization") || !skipped("quotients");
      if (need_p) s.Stage("zvk", out["zvk"], [&](json& j) { p = ZvkStage(o, in, j); });
      if (skipped("zvk")) out.erase("zvk");
      if (!skipped("abelianization"))
        s.Stage("abelianization", out["abelianization"], [&](json& j) { AbelianizationStage(p, groups, o, j); });
      if (!skipped("quotients"))
        s.Stage("quotients", out["quotients"], [&](json& j) { QuotientsStage(p, groups, o, j); });
      if (!skipped("structural")) s.Stage("structural", out["structural"], [&](json& j) { StructuralStage(j); });
      if (!skipped("burau") || !skipped("orbit"))
        s.Stage("burau", out["burau"], [&](json& j) {
          image = std::make_unique<FiniteImage>(
              BurauRepresentation(in.f.strands(), o.modulus, o.t, ReverseStrands(o, &in)), BlocksFor(o, in),
              o.closure_cap);
          j = ImageJson(*image);
        });
      if (skipped("burau")) out.erase("burau");
      if (!skipped("orbit")) s.Stage("orbit", out["orbit"], [&](json& j) { OrbitStage(*image, in, base_gens, o, j); });
      if (!skipped("equivalence"))
        s.Stage("equivalence", out["verdict"], [&](json& j) {
          const auto [second, label] = SecondFor(o, in);
          j = VerdictToJson(
              Distinguish(in.f, second, BlocksFor(o, in), base_gens, DistinguishOptionsFor(o, in, o.modulus, o.t)));
          j["second"] = label;
        });
    } else {
      s.Stage("input", out, [&](json&) { throw InputError("unknown command '" + command + "'"); });
    }
  } catch (const Aborted&) {
  }
  return s.Finish();
}

json StripTiming(json report) {
  report.erase("timing");
  return report;
}

std::string Render(const json& report, bool pretty) { return report.dump(pretty ? 2 : -1) + "\n"; }

}  // namespace braidmon::cli
