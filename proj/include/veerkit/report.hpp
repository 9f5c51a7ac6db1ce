#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "veerkit/covering.hpp"
#include "veerkit/veering.hpp"

namespace veerkit {

using json = nlohmann::json;

std::string version();

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInvalid = 2, kExitInternal = 3 };

/// {command, inputs, results, timing_ms, version} plus the process exit
/// code the command asks for. `text` is the human-readable rendering.
struct RunReport {
  json document;
  int exit_code = kExitOk;
  std::string text;
};

// NDJSON sink for commands that stream one record per cover.
using RecordSink = std::function<void(const json &)>;

json to_json(const Permutation &p); // 1-based image list
json to_json(const Coloring &c);
json to_json(const BraidWord &w);
json to_json(const VeeringReport &r);

Coloring coloring_from_json(const json &j);
SurfaceCover surface_cover_from_json(const json &j); // accepts "cuts" or "initial"
json load_json_file(const std::string &path);

/// Threads for survey: VEERKIT_THREADS if set and positive, else the
/// hardware concurrency.
unsigned worker_threads();

// Each command validates its inputs and throws InvalidInput on bad ones;
// run_command maps exceptions to exit codes.
RunReport cmd_gen(int m, int rep);
RunReport cmd_survey(int m, int rep, int max_k, unsigned threads, const RecordSink &sink);
RunReport cmd_example();
RunReport cmd_qp(int m, int rep);
RunReport cmd_covers(const std::string &braid, std::optional<int> strands, int min_k, int max_k,
                     const RecordSink &sink);
RunReport cmd_reduce(const SurfaceCover &cover, const std::string &word, int start_sheet, std::size_t budget);
RunReport cmd_veering(const std::string &braid, const Coloring &cover, std::size_t budget);
RunReport cmd_selfcheck(std::uint64_t seed, std::size_t cases);

/// Runs `body`, turning InvalidInput into exit 2 and any other exception
/// into exit 3, with the error in the report.
RunReport run_command(const std::string &command, const std::function<RunReport()> &body);

} // namespace veerkit
