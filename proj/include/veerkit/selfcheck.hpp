#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "veerkit/braid.hpp"
#include "veerkit/branching.hpp"
#include "veerkit/covering.hpp"

namespace veerkit {

inline constexpr std::uint64_t kDefaultSeed = 20260611;

// Random inputs for property checks. Every draw goes through the caller's
// engine so a seed reproduces a whole run.
BraidWord random_braid(std::mt19937_64 &rng, int max_strands, int max_letters);
SurfaceCover random_cover(std::mt19937_64 &rng, int max_k, int max_cuts);
BranchingWord random_branching_word(std::mt19937_64 &rng, int cuts, int max_letters);

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure; // input that failed first, for reproduction

  bool ok() const noexcept { return failures == 0; }
};

std::vector<std::string> property_names();

/// Runs `cases` random instances of one named property. Throws
/// InvalidInput for an unknown name.
PropertyResult run_property(std::string_view name, std::uint64_t seed, std::size_t cases);

/// Every property, each with its own engine seeded from `seed` and its name.
std::vector<PropertyResult> run_selfcheck(std::uint64_t seed, std::size_t cases);

} // namespace veerkit
