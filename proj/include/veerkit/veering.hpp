#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "veerkit/artin.hpp"
#include "veerkit/braid.hpp"
#include "veerkit/covering.hpp"
#include "veerkit/rewrite.hpp"

namespace veerkit {

enum class Verdict { LeftVeering, NoWitnessFound };

std::string verdict_name(Verdict v);

struct VeeringWitness {
  int cut = 1;          // the arc encloses this cut
  int start_sheet = 0;  // 0-based sheet of the lift
  BranchingWord word;   // branching word of the arc's image
  std::vector<DetailedBranchingWord> irreducible;
};

struct VeeringReport {
  Verdict verdict = Verdict::NoWitnessFound;
  std::optional<VeeringWitness> witness;
  std::vector<int> explored_cuts;
  // Set when the witness's irreducible forms were too many to list.
  std::optional<std::string> inconclusive_reason;
  // The verdict would change if a leading A_i^-1 also counted as starting
  // with A_i.
  bool sign_sensitive = false;
  std::size_t pairs_checked = 0; // (cut, sheet) pairs reduced
};

struct VeeringOptions {
  std::size_t budget = kDefaultReductionBudget; // irreducible forms listed for a witness
  // Treat a leading A_i of either sign as an obstruction.
  bool any_sign = false;
};

/// True when every form is nonempty and none begins with cut i (a positive
/// letter only, unless any_sign).
bool witnesses_left_veering(const std::set<DetailedBranchingWord> &forms, int cut, bool any_sign);

/// The same test read off the reduced runs: a leading tie run can start
/// with either sign.
bool witnesses_left_veering(const std::vector<ReducedBlock> &blocks, int cut, bool any_sign);

/// For each cut i and sheet s, details artin_image(w, i) from s and reduces
/// it. A pair whose irreducible forms are all nonempty and do not start
/// with A_i certifies left-veering. Throws InvalidInput on an invalid cover.
VeeringReport left_veering_witness(const BraidWord &w, const Coloring &c, const VeeringOptions &opts = {});

} // namespace veerkit
