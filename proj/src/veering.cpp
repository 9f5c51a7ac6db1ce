#include "veerkit/veering.hpp"

#include "veerkit/error.hpp"

namespace veerkit {

std::string verdict_name(Verdict v) { return v == Verdict::LeftVeering ? "LeftVeering" : "NoWitnessFound"; }

bool witnesses_left_veering(const std::set<DetailedBranchingWord> &forms, int cut, bool any_sign) {
  if (forms.empty())
    return false;
  for (const auto &f : forms) {
    if (f.empty())
      return false;
    const auto &head = f.letters.front();
    if (head.cut == cut && (any_sign || head.sign > 0))
      return false;
  }
  return true;
}

bool witnesses_left_veering(const std::vector<ReducedBlock> &blocks, int cut, bool any_sign) {
  if (blocks.empty())
    return false;
  const auto &head = blocks.front();
  return !(head.cut == cut && (any_sign || head.sign > 0 || head.tie));
}

VeeringReport left_veering_witness(const BraidWord &w, const Coloring &c, const VeeringOptions &opts) {
  if (!is_valid_cover(w, c))
    throw InvalidInput("coloring is not a valid connected cover of the braid closure");
  const SurfaceCover sc = SurfaceCover::from_coloring(c);
  VeeringReport report;
  bool other = false; // a witness under the opposite sign reading
  int found_cut = 0;
  int found_sheet = 0;
  BranchingWord found_word;

  for (int cut = 1; cut <= w.strands() && !(found_cut && other); ++cut) {
    report.explored_cuts.push_back(cut);
    const BranchingWord bw = artin_image(w, cut);
    for (int s = 0; s < c.k; ++s) {
      const auto blocks = reduced_blocks(detail(bw, sc, s), sc);
      ++report.pairs_checked;
      if (!found_cut && witnesses_left_veering(blocks, cut, opts.any_sign)) {
        found_cut = cut;
        found_sheet = s;
        found_word = bw;
      }
      other = other || witnesses_left_veering(blocks, cut, !opts.any_sign);
      if (found_cut && other)
        break;
    }
  }
  report.sign_sensitive = (found_cut != 0) != other;
  if (found_cut) {
    report.verdict = Verdict::LeftVeering;
    const auto red = reduce_all(detail(found_word, sc, found_sheet), sc, opts.budget);
    report.witness = VeeringWitness{found_cut, found_sheet, found_word, {red.forms.begin(), red.forms.end()}};
    if (red.status == ReductionStatus::BudgetExhausted)
      report.inconclusive_reason = "witness has more than " + std::to_string(opts.budget) + " irreducible forms";
  }
  return report;
}

} // namespace veerkit
