#include "oracles.hpp"

#include <deque>
#include <map>

#include "veerkit/rewrite.hpp"
#include "veerkit/selfcheck.hpp"

namespace oracle {

namespace {

std::optional<std::uint64_t> &seed_slot() {
  static std::optional<std::uint64_t> s;
  return s;
}

FreeWord inverse(const FreeWord &w) {
  FreeWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(-*it);
  return out;
}

FreeWord cat(std::initializer_list<FreeWord> parts) {
  FreeWord out;
  for (const auto &p : parts)
    out.insert(out.end(), p.begin(), p.end());
  return free_reduce(out);
}

// Substitutes the images of one letter's automorphism into w.
FreeWord substitute(const FreeWord &w, int letter) {
  const int i = std::abs(letter);
  FreeWord out;
  for (int x : w) {
    const int g = std::abs(x);
    FreeWord img{g};
    if (letter > 0) {
      if (g == i)
        img = {i, i + 1, -i};
      else if (g == i + 1)
        img = {i};
    } else {
      if (g == i)
        img = {i + 1};
      else if (g == i + 1)
        img = {-(i + 1), i, i + 1};
    }
    if (x < 0)
      img = inverse(img);
    out.insert(out.end(), img.begin(), img.end());
  }
  return free_reduce(out);
}

Permutation conj(const Permutation &x, const Permutation &y) { return x * y * x.inverse(); }
Permutation conj_inv(const Permutation &x, const Permutation &y) { return x.inverse() * y * x; }

} // namespace

void set_seed(std::uint64_t s) { seed_slot() = s; }
std::uint64_t seed() { return seed_slot().value_or(veerkit::kDefaultSeed); }

FreeWord free_reduce(const FreeWord &w) {
  FreeWord out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

std::vector<FreeWord> artin_images(const BraidWord &w) {
  std::vector<FreeWord> images;
  for (int j = 1; j <= w.strands(); ++j)
    images.push_back({j});
  // The word acts with its first letter applied last, so each new letter is
  // substituted into the images built so far.
  for (int letter : w.signed_letters())
    for (auto &img : images)
      img = substitute(img, letter);
  return images;
}

bool free_group_braid_equal(const BraidWord &a, const BraidWord &b) {
  return a.strands() == b.strands() && artin_images(a) == artin_images(b);
}

std::optional<std::set<DetailedBranchingWord>> exhaustive_irreducible(const DetailedBranchingWord &dw,
                                                                      const SurfaceCover &cover,
                                                                      std::size_t limit) {
  std::set<DetailedBranchingWord> seen{dw}, irreducible;
  std::deque<DetailedBranchingWord> queue{dw};
  while (!queue.empty()) {
    const DetailedBranchingWord cur = queue.front();
    queue.pop_front();
    bool shortened = false;
    for (const auto &mv : veerkit::rewrite_moves(cur, cover)) {
      shortened = shortened || mv.result.size() < cur.size();
      if (seen.insert(mv.result).second) {
        if (seen.size() > limit)
          return std::nullopt;
        queue.push_back(mv.result);
      }
    }
    if (!shortened)
      irreducible.insert(cur);
  }
  return irreducible;
}

std::set<std::vector<Permutation>> valid_tuples(const BraidWord &w, int k) {
  const int b = w.strands();
  const auto letters = w.signed_letters();
  return system_solutions(
      [&](const std::vector<Permutation> &init) {
        std::vector<Permutation> c = init;
        for (int x : letters) {
          const auto i = static_cast<std::size_t>(std::abs(x) - 1);
          const Permutation p = c[i], q = c[i + 1];
          if (x > 0) {
            c[i] = conj(p, q);
            c[i + 1] = p;
          } else {
            c[i] = q;
            c[i + 1] = conj_inv(q, p);
          }
        }
        return c == init;
      },
      b, k);
}

Coloring brute_force_canonical(const Coloring &c) {
  std::optional<std::vector<Permutation>> best;
  for (const auto &g : veerkit::symmetric_group(static_cast<std::size_t>(c.k))) {
    std::vector<Permutation> v;
    for (const auto &p : c.initial)
      v.push_back(conj(g, p));
    if (!best || v < *best)
      best = v;
  }
  return {c.k, *best};
}

std::set<Coloring> brute_force_covers(const BraidWord &w, int k) {
  std::set<Coloring> out;
  for (const auto &t : valid_tuples(w, k))
    out.insert(brute_force_canonical({k, t}));
  return out;
}

bool even_positive_system(const std::vector<Permutation> &A, int n, bool fix_last) {
  auto a = [&](int i) -> const Permutation & { return A[static_cast<std::size_t>(i - 1)]; };
  std::map<int, Permutation> b, c;
  b[n - 2] = conj(a(n), a(n + 2));
  for (int i = n - 3; i >= 0; --i)
    b[i] = conj(a(i + 2), b[i + 1]);
  if (a(n + 1) != conj(a(1), b[0]))
    return false;
  for (int i = 1; i <= n - 1; ++i)
    if (a(i) != conj(a(n + 1), a(i + 1)))
      return false;
  c[1] = conj(a(n + 1), a(1));
  for (int i = 2; i <= n + 1; ++i)
    c[i] = conj_inv(a(i - 1), c[i - 1]);
  return a(n + 2) == (fix_last ? conj_inv(a(n + 1), c[n + 1]) : conj(a(n + 1), c[n + 1]));
}

bool odd_negative_system(const std::vector<Permutation> &A, int n) {
  auto a = [&](int i) -> const Permutation & { return A[static_cast<std::size_t>(i - 1)]; };
  std::map<int, Permutation> b, c;
  c[1] = conj(a(n + 1), a(n + 2));
  for (int i = 1; i <= n - 1; ++i)
    b[i] = conj_inv(c[1], a(i + 1));
  if (a(n + 2) != conj_inv(c[1], a(1)))
    return false;
  for (int i = 1; i <= n - 1; ++i)
    if (a(i) != conj(a(n + 2), b[i]))
      return false;
  if (a(n) != conj(a(n + 2), a(n + 1)))
    return false;
  for (int i = 2; i <= n; ++i)
    c[i] = conj_inv(a(i - 1), c[i - 1]);
  return a(n + 1) == conj_inv(a(n), c[n]);
}

bool odd_positive_system(const std::vector<Permutation> &A, int n) {
  auto a = [&](int i) -> const Permutation & { return A[static_cast<std::size_t>(i - 1)]; };
  std::map<int, Permutation> b;
  b[n - 1] = conj(a(n + 1), a(n + 2));
  for (int i = n - 2; i >= 0; --i)
    b[i] = conj(a(i + 2), b[i + 1]);
  const Permutation cn = conj(a(1), b[0]);
  for (int i = 1; i <= n; ++i)
    if (a(i) != conj(cn, a(i + 1)))
      return false;
  return a(n + 1) == conj(a(n + 2), cn);
}

std::vector<Permutation> diagram_labels(const std::vector<Permutation> &strand_colors) {
  std::vector<Permutation> out;
  const std::size_t b = strand_colors.size();
  for (std::size_t i = 0; i < b; ++i)
    out.push_back(strand_colors[(i + 1) % b]);
  return out;
}

} // namespace oracle
