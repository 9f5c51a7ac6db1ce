#pragma once

#include <vector>

#include "veerkit/braid.hpp"
#include "veerkit/branching.hpp"

namespace veerkit {

/// Automorphism of the free group on x_1..x_strands induced by a braid,
/// stored as the images of the generators. Words are BranchingWords: letter
/// A_j stands for x_j, the loop around puncture j.
///
/// sigma_i:    x_i -> x_i x_{i+1} x_i^-1,     x_{i+1} -> x_i
/// sigma_i^-1: x_i -> x_{i+1},                x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
/// and a word acts as phi_L o ... o phi_1 (first letter applied last).
class FreeAutomorphism {
public:
  explicit FreeAutomorphism(const BraidWord &w);

  int rank() const noexcept { return static_cast<int>(images_.size()); }
  const BranchingWord &image(int generator) const { return images_.at(static_cast<std::size_t>(generator - 1)); }
  BranchingWord apply(const BranchingWord &word) const;

  friend bool operator==(const FreeAutomorphism &, const FreeAutomorphism &) = default;

private:
  std::vector<BranchingWord> images_;
};

/// Branching word of the image of the arc enclosing cut j: with
/// P = A_1 ... A_{j-1}, the freely reduced P^-1 phi(P A_j^-1 P^-1) P A_j.
/// The identity braid gives the empty word.
BranchingWord artin_image(const BraidWord &w, int j);

} // namespace veerkit
