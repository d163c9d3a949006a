#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "siltkit/cli.hpp"

using namespace siltkit;

int main(int argc, char** argv) {
  CLI::App app{"siltkit: exact computations with bound quiver algebras and their silting objects"};
  app.require_subcommand(1);

  std::string fixture_id, standard_spec, algebra_file, format = "json", out_file;
  bool timing = false;

  struct VerbSpec {
    const char* name;
    const char* about;
    std::vector<std::pair<const char*, const char*>> opts;  // (option, help)
    std::vector<const char*> flags;
  };
  const std::vector<VerbSpec> verbs = {
      {"basis", "normal-form basis and block dimensions", {}, {}},
      {"cartan", "Cartan and Coxeter matrices", {}, {}},
      {"coxeter", "Coxeter polynomial with Dynkin-table matching", {}, {}},
      {"flags", "structural flags (gentle, Nakayama, weak symmetry, ...)", {}, {}},
      {"truncate", "presentation of eAe", {{"--vertices", "comma-separated vertex ids"}}, {}},
      {"quotient", "presentation of A/AeA", {{"--vertices", "comma-separated vertex ids"}}, {}},
      {"tensor", "tensor product with a second algebra", {{"--with", "fixture id or family spec"}}, {}},
      {"stratify",
       "stratifying-idempotent test with the Tor profile",
       {{"--vertices", "comma-separated vertex ids"}, {"--cap", "resolution cap"}},
       {}},
      {"ae-cohomology",
       "cohomology dimensions of the idempotent dg algebra",
       {{"--vertices", "comma-separated vertex ids"}, {"--cap", "resolution cap"}},
       {}},
      {"hom",
       "hom space in the homotopy category",
       {{"--left", "p:<vertex> or s:<vertex>"}, {"--right", "p:<vertex> or s:<vertex>"}, {"--shift", "degree"}},
       {}},
      {"mutate",
       "iterated irreducible mutation from the free module",
       {{"--at", "comma-separated summand indices"}, {"--side", "left (default) or right"}},
       {}},
      {"enumerate",
       "breadth-first silting interval enumeration",
       {{"--d", "interval width (default 2)"}, {"--cap", "node cap"}, {"--threads", "worker threads"}},
       {}},
      {"audit",
       "tilting audit of a complete interval (weakly-symmetric algebras)",
       {{"--d", "interval width"}, {"--cap", "node cap"}, {"--threads", "worker threads"}},
       {}},
      {"oracle",
       "rule-based silting-discreteness verdict with certificates",
       {{"--assert-pw-hereditary", "trusted piecewise-hereditary type, e.g. A4"},
        {"--tensor-factors", "comma-separated extra tensor factors"},
        {"--r9-subset-limit", "full subset search up to this vertex count"},
        {"--r10-cap", "two-term evidence cap (0 disables)"}},
       {"--assert-simply-connected", "--assert-nonlocal", "--r9-all-subsets"}},
      {"fixture-list", "list the bundled example algebras", {}, {}},
  };

  std::map<std::string, CLI::App*> subs;
  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, bool>> flagvals;

  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.about);
    if (std::string(v.name) != "fixture-list") {
      sub->add_option("--fixture", fixture_id, "bundled fixture id (see fixture-list)");
      sub->add_option("--standard", standard_spec, "family spec, e.g. nakayama_cyclic(2,3) or ladder(4)");
      sub->add_option("--algebra", algebra_file, "input file in the algebra language");
    }
    sub->add_option("--format", format, "json (default) or dot");
    sub->add_option("--out", out_file, "write the report to a file instead of stdout");
    sub->add_flag("--timing", timing, "include timing_ms in the report");
    for (const auto& [opt, help] : v.opts) sub->add_option(opt, values[v.name][opt + 2], help);
    for (const char* f : v.flags) sub->add_flag(f, flagvals[v.name][f + 2], "");
    subs[v.name] = sub;
  }

  CLI11_PARSE(app, argc, argv);

  Command cmd;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) cmd.verb = name;

  if (!fixture_id.empty()) cmd.options["fixture"] = fixture_id;
  if (!standard_spec.empty()) cmd.options["standard"] = standard_spec;
  if (!algebra_file.empty()) {
    std::ifstream in(algebra_file);
    if (!in) {
      std::cerr << "cannot read '" << algebra_file << "'\n";
      return 1;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    cmd.options["algebra-text"] = ss.str();
  }
  if (timing) cmd.options["timing"] = "1";
  for (const auto& [k, v] : values[cmd.verb])
    if (!v.empty()) cmd.options[k] = v;
  for (const auto& [k, v] : flagvals[cmd.verb])
    if (v) cmd.options[k] = "1";

  RunOutcome outcome = run_command(cmd);
  if (outcome.exit_code != 0) {
    std::cerr << "error: " << outcome.error << "\n";
    return outcome.exit_code;
  }

  std::string text;
  try {
    text = export_report(outcome.report, format);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (!out_file.empty()) {
    std::ofstream os(out_file);
    os << text;
  } else {
    std::cout << text;
  }
  return 0;
}
