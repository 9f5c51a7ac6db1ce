#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "veerkit/branching.hpp"
#include "veerkit/covering.hpp"

namespace veerkit {

/// Decorates each letter with its sheet transition, starting at the 0-based
/// `start_sheet`: positive A_j goes from s to a_j(s), negative to a_j^-1(s).
DetailedBranchingWord detail(const BranchingWord &bw, const SurfaceCover &sc, int start_sheet);

/// Removes a letter that stays on its sheet.
DetailedBranchingWord rewrite_type0(const DetailedBranchingWord &dw, std::size_t position);

/// Removes A^s_{ij} A^-s_{ji} at position, position+1.
DetailedBranchingWord rewrite_type1(const DetailedBranchingWord &dw, std::size_t position);

/// Replaces the run of k-1 same-cut, same-sign letters starting at position
/// by the n-k+1 letters of opposite sign going the other way around the
/// n-cycle of the cut's permutation. Needs ceil(n/2) < k <= n+1; k = n+1 is a
/// full turn and leaves nothing.
DetailedBranchingWord rewrite_type2(const DetailedBranchingWord &dw, std::size_t position, int k,
                                    const SurfaceCover &cover);

enum class RewriteType { Type0, Type1, Type2 };

struct RewriteMove {
  RewriteType type = RewriteType::Type0;
  std::size_t position = 0;
  int k = 0; // Type 2 only
  DetailedBranchingWord result;

  // Length strictly decreases. Type 2 on an even cycle with k = n/2+1 keeps
  // the length; those moves only trade between equally short words.
  bool shortens(const DetailedBranchingWord &from) const { return result.size() < from.size(); }
};

/// Every single rewrite applicable to dw, in a fixed order.
std::vector<RewriteMove> rewrite_moves(const DetailedBranchingWord &dw, const SurfaceCover &cover);

/// True when no rewrite shortens dw.
bool is_irreducible(const DetailedBranchingWord &dw, const SurfaceCover &cover);

/// A maximal run of consecutive letters on one cut, after reduction.
///
/// Such a run stays inside one n-cycle of the cut's permutation, and the
/// rewrites only change its net number of turns by multiples of n. A
/// reduced word is therefore a sequence of runs on alternating cuts, each
/// turning r steps with 0 < r <= n/2. A run of exactly n/2 steps on an even
/// cycle (a tie) can be spelled with either sign.
struct ReducedBlock {
  int cut = 1;
  int from = 0;   // 0-based sheet the run starts on
  int sign = 1;   // sign of the spelling that goes forward around the cycle
  int length = 1; // letters in the run
  int cycle = 1;  // n
  bool tie = false;

  friend bool operator==(const ReducedBlock &, const ReducedBlock &) = default;
};

/// Reduces dw to runs by cancelling turns modulo each run's cycle length;
/// a run that closes up disappears and its neighbours may merge.
std::vector<ReducedBlock> reduced_blocks(const DetailedBranchingWord &dw, const SurfaceCover &cover);

enum class ReductionStatus { Complete, BudgetExhausted };

struct ReductionResult {
  std::set<DetailedBranchingWord> forms;
  ReductionStatus status = ReductionStatus::Complete;
  std::size_t visited = 0; // forms produced
};

inline constexpr std::size_t kDefaultReductionBudget = 1'000'000;

/// Every irreducible word reachable from dw by rewrites: the reduced runs
/// with each tie spelled both ways. There are 2^(ties) of them; if that
/// exceeds `budget` the result is marked BudgetExhausted and `forms` is
/// empty.
ReductionResult reduce_all(const DetailedBranchingWord &dw, const SurfaceCover &cover,
                           std::size_t budget = kDefaultReductionBudget);

/// A shortest sequence of rewrites from `from` to `to`, inclusive of both
/// ends; empty if `to` is not reachable within the budget.
std::vector<DetailedBranchingWord> reduction_path(const DetailedBranchingWord &from,
                                                  const DetailedBranchingWord &to, const SurfaceCover &cover,
                                                  std::size_t budget = kDefaultReductionBudget);

} // namespace veerkit
