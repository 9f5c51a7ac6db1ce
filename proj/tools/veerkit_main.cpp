#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "veerkit/report.hpp"
#include "veerkit/selfcheck.hpp"

using namespace veerkit;

namespace {

struct Flags {
  int m = 0;
  int rep = 1;
  int max_k = 3;
  std::optional<int> k;
  std::string braid;
  std::optional<int> strands;
  std::string cover;
  std::string word;
  int sheet = 1;
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t cases = 200;
  std::size_t budget = kDefaultReductionBudget;
};

void ndjson(const json &record) { std::cout << record.dump() << '\n' << std::flush; }

int emit(const RunReport &r, bool as_json) {
  if (as_json)
    std::cout << r.document.dump() << '\n';
  else if (r.exit_code == kExitOk)
    std::cout << r.text;
  else
    std::cerr << r.text;
  return r.exit_code;
}

// Streaming commands: records then the report, all on stdout as NDJSON.
int emit_stream(const RunReport &r) {
  std::cout << r.document.dump() << '\n';
  if (!r.text.empty())
    std::cerr << r.text;
  return r.exit_code;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Branched-cover veering checks for transverse twist knots"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  Flags f;

  auto *gen = app.add_subcommand("gen", "braid representative of K_m with its self-linking number");
  gen->add_option("--m", f.m, "twist parameter")->required();
  gen->add_option("--rep", f.rep, "representative index for m <= -4 even");
  gen->add_flag("--json", f.json, "print the full report");

  auto *survey = app.add_subcommand("survey", "left-veering verdict for every cover up to a degree");
  survey->add_option("--m", f.m, "twist parameter")->required();
  survey->add_option("--rep", f.rep, "representative index for m <= -4 even");
  survey->add_option("--max-k", f.max_k, "largest cover degree (<= 7)");
  survey->add_flag("--json", f.json, "accepted for symmetry; output is always NDJSON");

  auto *example = app.add_subcommand("example", "reduce the built-in 7-sheeted example word");
  example->add_flag("--json", f.json, "print the full report");

  auto *qp = app.add_subcommand("qp", "verify the quasipositive factorization for m <= -4 even");
  qp->add_option("--m", f.m, "twist parameter")->required();
  qp->add_option("--rep", f.rep, "representative index");
  qp->add_flag("--json", f.json, "print the full report");

  auto *covers = app.add_subcommand("covers", "enumerate connected branched covers of a braid closure");
  covers->add_option("--braid", f.braid, "signed generators, e.g. \"2 -1 -1 -2 1 2\"")->required();
  covers->add_option("--strands", f.strands, "strand count (default: largest index + 1)");
  auto *k_opt = covers->add_option("--k", f.k, "single degree");
  covers->add_option("--max-k", f.max_k, "all degrees 1..max-k")->excludes(k_opt);
  covers->add_flag("--json", f.json, "accepted for symmetry; output is always NDJSON");

  auto *reduce = app.add_subcommand("reduce", "all irreducible forms of a detailed branching word");
  reduce->add_option("--cover", f.cover, "cover JSON file")->required()->check(CLI::ExistingFile);
  reduce->add_option("--word", f.word, "word, detailed (A2{6->5} ...) or plain (A2 A3' ...)")->required();
  reduce->add_option("--sheet", f.sheet, "start sheet for a plain word (1-based)");
  reduce->add_option("--budget", f.budget, "maximum number of forms to list");
  reduce->add_flag("--json", f.json, "print the full report");

  auto *veering = app.add_subcommand("veering", "search for a left-veering witness");
  veering->add_option("--braid", f.braid, "signed generators")->required();
  veering->add_option("--cover", f.cover, "cover JSON file")->required()->check(CLI::ExistingFile);
  veering->add_option("--budget", f.budget, "maximum number of forms to list for the witness");
  veering->add_flag("--json", f.json, "print the full report");

  auto *selfcheck = app.add_subcommand("selfcheck", "seeded randomized consistency checks");
  selfcheck->add_option("--seed", f.seed, "random seed");
  selfcheck->add_option("--cases", f.cases, "cases per property");
  selfcheck->add_flag("--json", f.json, "print the full report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  if (gen->parsed())
    return emit(run_command("gen", [&] { return cmd_gen(f.m, f.rep); }), f.json);
  if (survey->parsed())
    return emit_stream(run_command("survey", [&] { return cmd_survey(f.m, f.rep, f.max_k, worker_threads(), ndjson); }));
  if (example->parsed())
    return emit(run_command("example", [] { return cmd_example(); }), f.json);
  if (qp->parsed())
    return emit(run_command("qp", [&] { return cmd_qp(f.m, f.rep); }), f.json);
  if (covers->parsed()) {
    const int lo = f.k ? *f.k : 1;
    const int hi = f.k ? *f.k : f.max_k;
    return emit_stream(run_command("covers", [&] { return cmd_covers(f.braid, f.strands, lo, hi, ndjson); }));
  }
  if (reduce->parsed())
    return emit(run_command("reduce",
                            [&] {
                              return cmd_reduce(surface_cover_from_json(load_json_file(f.cover)), f.word, f.sheet,
                                                f.budget);
                            }),
                f.json);
  if (veering->parsed())
    return emit(run_command("veering",
                            [&] {
                              return cmd_veering(f.braid, coloring_from_json(load_json_file(f.cover)), f.budget);
                            }),
                f.json);
  if (selfcheck->parsed())
    return emit(run_command("selfcheck", [&] { return cmd_selfcheck(f.seed, f.cases); }), f.json);
  return kExitUsage;
}
