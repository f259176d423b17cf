#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "braidmon/cli/commands.hpp"
#include "braidmon/monodromy/diagram.hpp"
#include "braidmon/monodromy/eyral_oka.hpp"

using namespace braidmon;
using nlohmann::json;

namespace {

struct Outcome {
  int code = 0;
  json report;
  std::string err;
};

Outcome RunArgs(std::vector<std::string> args) {
  args.insert(args.begin(), "braidmon");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::Main(static_cast<int>(argv.size()), argv.data(), out, err);
  o.err = err.str();
  if (!out.str().empty() && out.str()[0] == '{') o.report = json::parse(out.str());
  return o;
}

std::string TempFile(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("braidmon_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("default pipeline reproduces the distinguishing computation") {
  const Outcome r = RunArgs({"pipeline"});
  REQUIRE(r.code == cli::kExitOk);
  const json& out = r.report["outputs"];
  CHECK(r.report["command"] == "pipeline");
  CHECK(r.report.contains("versions"));
  CHECK(r.report["timing"].contains("total_ms"));
  CHECK(out["diagram"]["diagram_matches_reference"] == true);
  CHECK(out["full_twist"]["holds"] == true);
  CHECK(out["full_twist"]["k"] == 2);
  CHECK(out["zvk"]["presentation"]["generator_count"] == 4);
  CHECK(out["zvk"]["presentation"]["relator_count"] == 6);
  CHECK(out["abelianization"]["invariants"] == "Z");
  CHECK(out["quotients"]["quotients"]["line"]["abelianization"]["invariants"] == "Z/6");
  CHECK(out["quotients"]["hom_counts_equal"] == true);
  CHECK(out["structural"]["all_passed"] == true);
  CHECK(out["burau"]["group_order"] == 768);
  CHECK(out["orbit"]["orbit_size"] == 6);
  CHECK(out["verdict"]["outcome"] == "distinguished");
  CHECK(out["verdict"]["conclusive"] == true);
}

TEST_CASE("identical flags give identical reports") {
  const Outcome a = RunArgs({"pipeline", "--jobs", "2"});
  const Outcome b = RunArgs({"pipeline", "--jobs", "2"});
  CHECK(cli::StripTiming(a.report).dump() == cli::StripTiming(b.report).dump());
  const Outcome quiet = RunArgs({"--no-timing", "pipeline", "--jobs", "2"});
  CHECK_FALSE(quiet.report.contains("timing"));
  CHECK(quiet.report.dump() == cli::StripTiming(a.report).dump());
}

TEST_CASE("skipping stages") {
  const Outcome r = RunArgs({"pipeline", "--skip", "equivalence"});
  CHECK(r.code == cli::kExitOk);
  CHECK_FALSE(r.report["outputs"].contains("verdict"));
  CHECK(r.report["outputs"].contains("orbit"));
  const Outcome more = RunArgs({"pipeline", "--skip", "orbit,equivalence,burau,quotients"});
  CHECK(more.code == cli::kExitOk);
  CHECK_FALSE(more.report["outputs"].contains("burau"));
  CHECK(more.report["outputs"].contains("abelianization"));
  CHECK(RunArgs({"pipeline", "--skip", "everything"}).code == cli::kExitInput);
}

TEST_CASE("weaker specialization is labeled inconclusive") {
  const Outcome r = RunArgs({"pipeline", "--mod", "2", "--t", "1"});
  REQUIRE(r.code == cli::kExitOk);
  const json& v = r.report["outputs"]["verdict"];
  CHECK(v["outcome"] == "not-distinguished");
  CHECK(v["conclusive"] == false);
  CHECK(v.contains("note"));
}

TEST_CASE("exit codes") {
  const Outcome budget = RunArgs({"burau", "--closure", "--closure-cap", "10"});
  CHECK(budget.code == cli::kExitBudget);
  CHECK(budget.report["error"]["kind"] == "budget");

  const Outcome bad_twist = RunArgs({"pipeline", "--completion", "s1^2"});
  CHECK(bad_twist.code == cli::kExitVerification);
  CHECK(bad_twist.report["error"]["stage"] == "full-twist");
  CHECK_FALSE(bad_twist.report["outputs"].contains("verdict"));

  CHECK(RunArgs({"pipeline", "--curve", "nodal-cubic"}).code == cli::kExitInput);
  CHECK(RunArgs({"pipeline", "--t", "2"}).report["error"]["stage"] == "burau");
  CHECK(RunArgs({"burau", "--no-such-flag"}).code == cli::kExitInput);
  CHECK(RunArgs({}).code == cli::kExitInput);
  CHECK(RunArgs({"--help"}).code == cli::kExitOk);
  CHECK(RunArgs({"orbit", "--orbit-cap", "3"}).code == cli::kExitBudget);
}

TEST_CASE("burau command") {
  const Outcome r = RunArgs({"burau", "--strands", "4", "--mod", "4", "--t", "3", "--closure", "--blocks", "1,2|3,4",
                             "--word", "s1 s2^-1"});
  REQUIRE(r.code == cli::kExitOk);
  const json& out = r.report["outputs"];
  CHECK(out["generators"] == json::parse("[[[1,0,0],[1,1,0],[1,0,1]],[[2,3,0],[1,0,0],[0,0,1]],"
                                         "[[1,0,0],[0,2,3],[0,1,0]]]"));
  CHECK(out["closure"]["order"] == 768);
  CHECK(out["closure"]["subgroup_order"] == 128);
  CHECK(out["word"]["image"].size() == 3);
  CHECK(out["laurent_generators"][0] == "[[-t,0,0],[-t,1,0],[-t,0,1]]");
}

TEST_CASE("distinguish accepts the plain base generator list") {
  const Outcome r = RunArgs({"distinguish", "--curve", "eyral-oka", "--mod", "4", "--t", "3", "--blocks", "1,2|3,4",
                             "--base-gens", "s1^-2 s2^-2 s1 s2 s1^-1"});
  REQUIRE(r.code == cli::kExitOk);
  const json& v = r.report["outputs"]["verdict"];
  CHECK(v["outcome"] == "distinguished");
  CHECK(v["base_generators"] == json({"s1^-1 s1^-1", "s2^-1 s2^-1", "s1 s2 s1^-1"}));
  // Dotted and comma forms read the same generators.
  const Outcome dotted = RunArgs({"--no-timing", "distinguish", "--base-gens", "s1^-2 s2^-2 s1.s2.s1^-1"});
  const Outcome commas = RunArgs({"--no-timing", "distinguish", "--base-gens", "s1^-2, s2^-2, s1 s2 s1^-1"});
  CHECK(dotted.report["outputs"] == commas.report["outputs"]);
  CHECK(dotted.report["outputs"] == r.report["outputs"]);
  // s1 swaps an E6 point with the A2 point.
  CHECK(RunArgs({"distinguish", "--base-gens", "s1, s2^2"}).code == cli::kExitInput);
  CHECK(RunArgs({"distinguish", "--base-gens", "s1^-2 s1"}).code == cli::kExitInput);
}

TEST_CASE("distinguish against conjugates and scans") {
  const Outcome same = RunArgs({"distinguish", "--conjugate-by", "s1 s3^-1 s2^2"});
  CHECK(same.code == cli::kExitOk);
  CHECK(same.report["outputs"]["verdict"]["outcome"] == "not-distinguished");
  const Outcome scan = RunArgs({"distinguish", "--scan", "2:1,4:3"});
  REQUIRE(scan.code == cli::kExitOk);
  CHECK(scan.report["outputs"]["scan"].size() == 2);
  CHECK(scan.report["outputs"]["scan"][0]["outcome"] == "not-distinguished");
  CHECK(scan.report["outputs"]["scan"][1]["outcome"] == "distinguished");
  CHECK(scan.report["outputs"]["verdict"]["representation"]["modulus"] == 4);
  CHECK(RunArgs({"distinguish", "--scan", "4-3"}).code == cli::kExitInput);
}

TEST_CASE("orbit command") {
  const Outcome r = RunArgs({"orbit"});
  REQUIRE(r.code == cli::kExitOk);
  const json& out = r.report["outputs"];
  CHECK(out["orbit_size"] == 6);
  CHECK(out["representation"]["subgroup_order"] == 128);
  for (const auto& p : out["generator_permutations"]) CHECK(p["cycle_type"] == json({3, 3}));
}

TEST_CASE("diagram and factorization inputs") {
  const std::string diagram = TempFile("curve.diagram", EyralOkaDiagramText());
  const Outcome d = RunArgs({"diagram", "--diagram", diagram, "--completion", "s1^2 s3^2"});
  REQUIRE(d.code == cli::kExitOk);
  CHECK(d.report["outputs"]["factorization"] == FactorizationToJson(CompileDiagram(ParseDiagram(EyralOkaDiagramText()))));
  CHECK(d.report["outputs"]["full_twist"]["holds"] == true);
  const Outcome no_completion = RunArgs({"diagram", "--diagram", diagram});
  CHECK(no_completion.report["outputs"]["full_twist"]["checked"] == false);

  const std::string fact = TempFile("fact.json", FactorizationToJson(EyralOkaFactorization()).dump());
  const Outcome a = RunArgs({"--no-timing", "zvk", "--factorization", fact});
  const Outcome b = RunArgs({"--no-timing", "zvk", "--curve", "eyral-oka"});
  CHECK(a.report["outputs"]["presentation"] == b.report["outputs"]["presentation"]);
  CHECK(RunArgs({"zvk", "--curve", "eyral-oka", "--diagram", diagram}).code == cli::kExitInput);
  CHECK(RunArgs({"zvk", "--diagram", "/nonexistent.diagram"}).code == cli::kExitInput);

  // Other curves default to the total partition and need explicit base generators.
  const Outcome other = RunArgs({"distinguish", "--diagram", diagram, "--base-gens", "s1^2, s2^2",
                                 "--conjugate-by", "s2 s3 s1 s2 s3 s1"});
  CHECK(other.code == cli::kExitOk);
  CHECK(other.report["outputs"]["verdict"]["blocks"] == "1,2,3,4");
  CHECK(RunArgs({"distinguish", "--diagram", diagram}).code == cli::kExitInput);
}

TEST_CASE("zvk and abelianize") {
  const Outcome z = RunArgs({"zvk", "--simplify", "--quotient", "line"});
  REQUIRE(z.code == cli::kExitOk);
  CHECK(z.report["outputs"]["simplified"]["generators"] == json({"g2", "g4"}));
  CHECK(z.report["outputs"]["simplified"]["relator_count"] == 4);
  CHECK(z.report["outputs"]["quotient"]["presentation"]["relator_count"] == 7);

  const Outcome plain = RunArgs({"abelianize", "--mode", "plain", "--homs", "S3,A4"});
  CHECK(plain.report["outputs"]["invariants"] == "Z");
  CHECK(plain.report["outputs"]["hom_counts"] == json({{"S3", 12}, {"A4", 36}}));
  const Outcome q = RunArgs({"abelianize", "--quotient", "exceptional", "--homs", "S3"});
  CHECK(q.report["outputs"]["invariants"] == "Z/6");

  const std::string pres =
      TempFile("s3.json", R"({"generators":["a","b"],"relators":["a^2","b^3","(a b)^2"]})");
  const Outcome s3 = RunArgs({"abelianize", "--presentation", pres, "--homs", "S3,Z2"});
  REQUIRE(s3.code == cli::kExitOk);
  CHECK(s3.report["outputs"]["invariants"] == "Z/2");
  CHECK(s3.report["outputs"]["hom_counts"]["S3"] == 10);
  CHECK(s3.report["outputs"]["hom_counts"]["Z/2"] == 2);
  CHECK(RunArgs({"abelianize", "--presentation", pres, "--curve", "eyral-oka"}).code == cli::kExitInput);
  CHECK(RunArgs({"abelianize", "--homs", "M24"}).code == cli::kExitInput);
}

TEST_CASE("verification commands") {
  const Outcome s = RunArgs({"verify-structure"});
  CHECK(s.code == cli::kExitOk);
  CHECK(s.report["outputs"]["checks"].size() == 5);
  const Outcome i = RunArgs({"verify-identity"});
  CHECK(i.code == cli::kExitOk);
  CHECK(i.report["outputs"]["holds"] == true);
}

TEST_CASE("pretty output is the same document") {
  std::vector<const char*> argv{"braidmon", "--pretty", "--no-timing", "verify-identity"};
  std::ostringstream out, err;
  REQUIRE(cli::Main(4, argv.data(), out, err) == 0);
  CHECK(out.str().find("\n  ") != std::string::npos);
  CHECK(json::parse(out.str()) == RunArgs({"--no-timing", "verify-identity"}).report);
}
