#include <ostream>

#include "CLI11.hpp"

#include "braidmon/cli/commands.hpp"

namespace braidmon::cli {

namespace {

void AddCurve(CLI::App* sub, Options& o) {
  sub->add_option("--curve", o.curve, "Bundled curve (eyral-oka)");
  sub->add_option("--diagram", o.diagram, "Curve diagram file");
  sub->add_option("--factorization", o.factorization, "Factorization JSON file");
  sub->add_option("--completion", o.completion, "Braid closing the product to a power of Delta^2");
}

void AddPresentation(CLI::App* sub, Options& o) {
  sub->add_option("--mode", o.mode, "ZvK relators: plain or decomposed")->check(CLI::IsMember({"plain", "decomposed"}));
  sub->add_flag("--simplify", o.simplify, "Apply Tietze simplification");
}

void AddGroups(CLI::App* sub, Options& o) {
  sub->add_option("--homs", o.homs, "Count homomorphisms into these groups (S3,S4,D4,Q8,A4,Z<n>)")->delimiter(',');
  sub->add_option("--group-file", o.group_files, "Multiplication table JSON to count homomorphisms into");
}

void AddRepresentation(CLI::App* sub, Options& o) {
  sub->add_option("--mod,--modulus", o.modulus, "Modulus of the Burau specialization");
  sub->add_option("--t", o.t, "Value of t (a unit mod the modulus)");
  sub->add_flag_callback("--reverse-strands", [&o] { o.reverse_strands = true; },
                         "Relabel s_i -> s_{n-i} before the representation");
  sub->add_flag_callback("--no-reverse-strands", [&o] { o.reverse_strands = false; }, "Natural strand labels");
  sub->add_option("--blocks", o.blocks, "Strand partition, e.g. \"1,2|3,4\"");
  sub->add_option("--closure-cap", o.closure_cap, "Maximum closure size");
}

void AddOrbit(CLI::App* sub, Options& o) {
  sub->add_option("--base-gens", o.base_gens, "Base generators, comma-separated braid words");
  sub->add_option("--base-blocks", o.base_blocks, "Partition of the entries the base generators must preserve");
  sub->add_option("--orbit-cap", o.orbit_cap, "Maximum orbit size");
}

void AddSecond(CLI::App* sub, Options& o) {
  sub->add_option("--conjugate-by", o.conjugate_by, "Second factorization: first conjugated by this braid");
  sub->add_option("--second-diagram", o.second_diagram, "Second factorization from a diagram file");
  sub->add_option("--second-factorization", o.second_factorization, "Second factorization JSON file");
}

}  // namespace

int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  bool pretty = false;
  bool no_timing = false;
  CLI::App app{"Braid monodromy, Zariski-van Kampen presentations and Burau equivalence tests", "braidmon"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", pretty, "Indented JSON");
  app.add_flag("--no-timing", no_timing, "Omit timing fields");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--hom-budget", o.hom_budget, "Search nodes per homomorphism count");

  CLI::App* diagram = app.add_subcommand("diagram", "Compile a curve diagram to a factorization");
  AddCurve(diagram, o);

  CLI::App* zvk = app.add_subcommand("zvk", "Zariski-van Kampen presentation");
  AddCurve(zvk, o);
  AddPresentation(zvk, o);
  zvk->add_option("--quotient", o.quotient, "Also emit a projective quotient")
      ->check(CLI::IsMember({"line", "exceptional"}));

  CLI::App* abelianize = app.add_subcommand("abelianize", "Abelian invariants and homomorphism counts");
  AddCurve(abelianize, o);
  AddPresentation(abelianize, o);
  AddGroups(abelianize, o);
  abelianize->add_option("--presentation", o.presentation, "Presentation JSON file");
  abelianize->add_option("--quotient", o.quotient, "Projective quotient to use")
      ->check(CLI::IsMember({"line", "exceptional"}));

  CLI::App* burau = app.add_subcommand("burau", "Specialized reduced Burau representation");
  burau->add_option("--strands", o.strands, "Number of strands")->check(CLI::Range(2, 16));
  AddRepresentation(burau, o);
  burau->add_flag("--closure", o.closure, "Enumerate the finite image");
  burau->add_option("--word", o.word, "Braid word to map");

  CLI::App* orbit = app.add_subcommand("orbit", "Hurwitz orbit of the factorization class");
  AddCurve(orbit, o);
  AddRepresentation(orbit, o);
  AddOrbit(orbit, o);

  CLI::App* distinguish = app.add_subcommand("distinguish", "Finite-image equivalence test of two factorizations");
  AddCurve(distinguish, o);
  AddRepresentation(distinguish, o);
  AddOrbit(distinguish, o);
  AddSecond(distinguish, o);
  distinguish->add_option("--scan", o.scan, "Specializations to try, e.g. \"4:3,2:1\"");

  app.add_subcommand("verify-structure", "Check the structural model of the fundamental group");
  app.add_subcommand("verify-identity", "Check the affine polynomial identity");

  CLI::App* pipeline = app.add_subcommand("pipeline", "Run every stage and write one report");
  AddCurve(pipeline, o);
  AddPresentation(pipeline, o);
  AddGroups(pipeline, o);
  AddRepresentation(pipeline, o);
  AddOrbit(pipeline, o);
  AddSecond(pipeline, o);
  pipeline->add_option("--skip", o.skip, "Stages to skip")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }
  o.timing = !no_timing;
  const RunResult r = Run(app.get_subcommands().front()->get_name(), o);
  out << Render(r.report, pretty);
  if (r.report.contains("error")) err << "braidmon: " << r.report["error"]["stage"].get<std::string>() << ": "
                                      << r.report["error"]["message"].get<std::string>() << "\n";
  return r.exit_code;
}

}  // namespace braidmon::cli
