#pragma once

#include <optional>
#include <vector>

#include "veerkit/braid.hpp"
#include "veerkit/permutation.hpp"

namespace veerkit {

/// Monodromy of a k-sheeted branched cover over a braid: the meridian image
/// of each initial strand, read on the bottom page.
struct Coloring {
  int k = 1;
  std::vector<Permutation> initial;

  friend auto operator<=>(const Coloring &, const Coloring &) = default;
  friend bool operator==(const Coloring &, const Coloring &) = default;
};

/// Branched cover of the disk with one permutation per branch cut.
struct SurfaceCover {
  int k = 1;
  std::vector<Permutation> cuts;

  static SurfaceCover from_coloring(const Coloring &c) { return {c.k, c.initial}; }
  const Permutation &cut(int j) const; // 1-based cut index
  int cut_count() const noexcept { return static_cast<int>(cuts.size()); }
};

/// All strands colored by the k-cycle (1 2 ... k).
Coloring cyclic_coloring(int strands, int k);

struct Propagation {
  std::vector<std::vector<Permutation>> levels; // levels[t]: colors after t letters
  std::vector<Permutation> final;
};

/// Wirtinger colors through the braid. sigma_i sends the colors (x, y) at
/// positions (i, i+1) to (x y x^-1, x); sigma_i^-1 sends (x, y) to
/// (y, y^-1 x y).
Propagation propagate(const BraidWord &w, const Coloring &c);

/// Closure condition (final colors equal initial ones) plus transitivity.
bool is_valid_cover(const BraidWord &w, const Coloring &c);

/// Least simultaneous conjugate, comparing image lists lexicographically.
Coloring canonical_form(const Coloring &c);

/// Valid covers of degree exactly k up to simultaneous conjugation, each in
/// canonical form, sorted.
std::vector<Coloring> enumerate_covers(const BraidWord &w, int k);

/// Which sheet condition applies: 1, 2 or 3 for the EvenPositive,
/// OddNegative and OddPositive families, with that family's n.
struct ConditionSpec {
  int case_no = 1;
  int n = 1;
};

/// Least 0-based sheet satisfying the case's two inequalities, if any.
std::optional<int> check_condition(const Coloring &c, const ConditionSpec &spec);

struct PageInvariants {
  int euler = 1;
  int boundary = 1;
  int genus = 0;
  friend bool operator==(const PageInvariants &, const PageInvariants &) = default;
};

/// Riemann-Hurwitz for the lifted disk. The boundary monodromy is the
/// functional product a_n ... a_1. Throws InconsistentState if the genus
/// comes out negative or fractional.
PageInvariants lifted_page_invariants(const SurfaceCover &sc);

} // namespace veerkit
