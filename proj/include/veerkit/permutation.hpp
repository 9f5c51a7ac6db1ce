#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace veerkit {

/// A bijection of {0, ..., degree-1}.
///
/// Points are 0-based in the API and rendered 1-based in text
/// ("(1 2)(3 4)"). `p * q` is functional composition: apply q first, then
/// p, matching the way monodromy products such as a_3 a_2 a_1 (i) are read.
/// `p.then(q)` is the same product written in reading order (p first).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);

  static Permutation from_images(std::vector<int> images);
  static Permutation from_one_based(std::span<const int> images);
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>> &one_based_cycles);
  // Cycle notation, 1-based: "(1 6)(2 4)(3 7)", "()" or "" for the identity.
  static Permutation parse_cycles(std::string_view text, std::size_t degree);
  static Permutation transposition(std::size_t degree, int a, int b);
  static Permutation cycle(std::size_t degree); // 0 -> 1 -> ... -> degree-1 -> 0

  std::size_t degree() const noexcept { return images_.size(); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int> &images() const noexcept { return images_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  Permutation then(const Permutation &next) const;
  // g * this * g^-1
  Permutation conjugated_by(const Permutation &g) const;

  bool is_identity() const noexcept;
  bool moves(int point) const { return (*this)(point) != point; }

  // Cycles (fixed points included), each starting at its least point, ordered by that point.
  std::vector<std::vector<int>> cycles() const;
  std::size_t cycle_count() const;
  // Cycle lengths in non-increasing order.
  std::vector<int> cycle_type() const;
  // Length of the cycle through `point`.
  int orbit_length(int point) const;

  std::string to_string() const;

  friend Permutation operator*(const Permutation &lhs, const Permutation &rhs);
  friend auto operator<=>(const Permutation &, const Permutation &) = default;
  friend bool operator==(const Permutation &, const Permutation &) = default;

private:
  explicit Permutation(std::vector<int> images, int) : images_(std::move(images)) {}
  std::vector<int> images_;
};

std::ostream &operator<<(std::ostream &os, const Permutation &p);

// True iff the group generated by `gens` acts transitively on {0..degree-1}.
bool generates_transitive(std::span<const Permutation> gens, std::size_t degree);

// All elements of S_k in lexicographic order of their image lists.
std::vector<Permutation> symmetric_group(std::size_t degree);

// A fixed representative of the conjugacy class with the given cycle type:
// consecutive points grouped into cycles of the given lengths.
Permutation class_representative(std::span<const int> cycle_type);

// Partitions of k in reverse lexicographic order: {k}, {k-1,1}, ...
std::vector<std::vector<int>> partitions(int k);

} // namespace veerkit

template <> struct std::hash<veerkit::Permutation> {
  std::size_t operator()(const veerkit::Permutation &p) const noexcept;
};
