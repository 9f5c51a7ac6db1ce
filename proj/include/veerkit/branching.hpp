#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace veerkit {

/// A crossing of branch cut A_cut (cut >= 1) with the given intersection sign.
struct CutLetter {
  int cut = 1;
  int sign = 1;

  CutLetter inverse() const noexcept { return {cut, -sign}; }
  friend auto operator<=>(const CutLetter &, const CutLetter &) = default;
};

/// Order and signs in which a curve crosses the branch cuts.
struct BranchingWord {
  std::vector<CutLetter> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  BranchingWord inverse() const;
  BranchingWord concat(const BranchingWord &rhs) const;
  // Cancels adjacent A_j A_j^-1 pairs.
  BranchingWord freely_reduced() const;
  bool is_freely_reduced() const;

  friend auto operator<=>(const BranchingWord &, const BranchingWord &) = default;
};

/// A crossing of A_cut taking a lifted curve from sheet `from` to sheet `to`
/// (0-based sheets). For a cover with cut permutations a_j, to = a_cut(from)
/// when sign = +1 and to = a_cut^-1(from) when sign = -1.
struct DetailedLetter {
  int cut = 1;
  int sign = 1;
  int from = 0;
  int to = 0;

  CutLetter undecorated() const noexcept { return {cut, sign}; }
  friend auto operator<=>(const DetailedLetter &, const DetailedLetter &) = default;
};

/// Consecutive letters chain: letters[t].from == letters[t-1].to.
struct DetailedBranchingWord {
  std::vector<DetailedLetter> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  bool is_chained() const;
  BranchingWord undecorated() const;

  friend auto operator<=>(const DetailedBranchingWord &, const DetailedBranchingWord &) = default;
};

// Text forms. Undecorated: "A2 A3' A1". Detailed, sheets 1-based:
// "A2{6->5} A3{5->4} A3{7->6}'". A trailing ' marks sign -1.
std::string to_string(const BranchingWord &w);
std::string to_string(const DetailedBranchingWord &w);
BranchingWord parse_branching_word(std::string_view text);
DetailedBranchingWord parse_detailed_word(std::string_view text);

std::ostream &operator<<(std::ostream &os, const BranchingWord &w);
std::ostream &operator<<(std::ostream &os, const DetailedBranchingWord &w);

} // namespace veerkit
