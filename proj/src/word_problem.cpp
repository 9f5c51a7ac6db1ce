#include "veerkit/word_problem.hpp"

#include <cstdlib>
#include <optional>
#include <utility>

#include "veerkit/error.hpp"

namespace veerkit {

namespace {

struct Handle {
  std::size_t begin; // index of the opening sigma_i^e
  std::size_t end;   // index of the closing sigma_i^-e
};

// Handle with the leftmost closing letter, searching closings from `from` on.
std::optional<Handle> first_handle(const std::vector<int> &w, std::size_t from) {
  for (std::size_t q = from; q < w.size(); ++q) {
    const int gen = std::abs(w[q]);
    for (std::size_t p = q; p-- > 0;) {
      const int g = std::abs(w[p]);
      if (g > gen)
        continue;
      if (g == gen && w[p] == -w[q])
        return Handle{p, q};
      break;
    }
  }
  return std::nullopt;
}

} // namespace

std::vector<int> handle_reduce(std::vector<int> word) {
  std::size_t resume = 0;
  std::vector<int> next;
  while (auto h = first_handle(word, resume)) {
    const int gen = std::abs(word[h->begin]);
    const int e = word[h->begin] > 0 ? 1 : -1;
    next.clear();
    next.reserve(word.size() + 2 * (h->end - h->begin));
    next.insert(next.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(h->begin));
    for (std::size_t t = h->begin + 1; t < h->end; ++t) {
      const int x = word[t];
      if (std::abs(x) == gen + 1) {
        const int d = x > 0 ? 1 : -1;
        next.push_back(-e * (gen + 1));
        next.push_back(d * gen);
        next.push_back(e * (gen + 1));
      } else {
        next.push_back(x);
      }
    }
    next.insert(next.end(), word.begin() + static_cast<std::ptrdiff_t>(h->end) + 1, word.end());
    // Everything before the opening letter was handle-free and is untouched,
    // so no handle can close before that point.
    resume = h->begin;
    word.swap(next);
  }
  return word;
}

bool is_trivial_braid(const BraidWord &w) { return handle_reduce(w.signed_letters()).empty(); }

bool braid_equal(const BraidWord &lhs, const BraidWord &rhs) {
  if (lhs.strands() != rhs.strands())
    throw InvalidInput("braid_equal: strand counts differ (" + std::to_string(lhs.strands()) + " vs " +
                       std::to_string(rhs.strands()) + ")");
  return is_trivial_braid(lhs.concat(rhs.inverse()));
}

} // namespace veerkit
