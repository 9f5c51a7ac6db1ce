#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "veerkit/permutation.hpp"

namespace veerkit {

/// sigma_index^sign, index >= 1.
struct BraidLetter {
  int index = 1;
  int sign = 1;

  static BraidLetter from_signed(int generator);
  int signed_value() const noexcept { return sign * index; }
  BraidLetter inverse() const noexcept { return {index, -sign}; }

  friend auto operator<=>(const BraidLetter &, const BraidLetter &) = default;
};

/// A word in the Artin generators on an explicit number of strands.
///
/// The strand count is fixed at construction and never re-inferred; the
/// self-linking number depends on it.
class BraidWord {
public:
  BraidWord() = default; // identity on one strand
  BraidWord(int strands, std::vector<BraidLetter> letters);
  BraidWord(int strands, std::initializer_list<int> generators);
  static BraidWord from_signed(int strands, std::span<const int> generators);

  int strands() const noexcept { return strands_; }
  const std::vector<BraidLetter> &letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::vector<int> signed_letters() const;

  BraidWord inverse() const;
  // Same strand count required.
  BraidWord concat(const BraidWord &rhs) const;
  BraidWord with_strands(int strands) const;

  // Whitespace-separated signed generators, e.g. "2 -1 -1 -2 1 2".
  std::string to_string() const;

  friend bool operator==(const BraidWord &, const BraidWord &) = default;

private:
  int strands_ = 1;
  std::vector<BraidLetter> letters_;
};

std::ostream &operator<<(std::ostream &os, const BraidWord &w);

/// Parses whitespace- or comma-separated nonzero integers; i > 0 is sigma_i,
/// i < 0 is sigma_|i|^-1. Without an explicit strand count the word lives
/// on max|i| + 1 strands (one strand when empty).
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

/// Image in S_strands: each letter is the transposition of its two positions,
/// composed in reading order. Maps a strand's starting position to its final one.
Permutation underlying_permutation(const BraidWord &w);

int closure_component_count(const BraidWord &w);

/// n_+ - n_- - strands; throws InvalidInput unless the closure is a knot.
int self_linking(const BraidWord &w);

/// Adds a strand and the letter sigma_{strands}^{sign}.
BraidWord markov_stabilize(const BraidWord &w, int sign);

} // namespace veerkit
