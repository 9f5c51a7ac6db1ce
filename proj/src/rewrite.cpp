#include "veerkit/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_map>

#include "veerkit/error.hpp"

namespace veerkit {

namespace {

struct WordHash {
  std::size_t operator()(const DetailedBranchingWord &w) const noexcept {
    std::size_t h = w.letters.size();
    for (const auto &l : w.letters) {
      const std::size_t v = static_cast<std::size_t>((l.cut * 2 + (l.sign > 0)) * 4099 + l.from * 64 + l.to);
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};


int step(const Permutation &p, int sign, int sheet) { return sign > 0 ? p(sheet) : p.inverse()(sheet); }

void validate(const DetailedBranchingWord &dw, const SurfaceCover &cover) {
  if (!dw.is_chained())
    throw InvalidInput("detailed word breaks the sheet chain: " + to_string(dw));
  for (const auto &l : dw.letters) {
    if (l.from < 0 || l.from >= cover.k || l.to < 0 || l.to >= cover.k)
      throw InvalidInput("sheet out of range in " + to_string(dw));
    if (step(cover.cut(l.cut), l.sign, l.from) != l.to)
      throw InvalidInput("letter A" + std::to_string(l.cut) + "{" + std::to_string(l.from + 1) + "->" +
                         std::to_string(l.to + 1) + "} does not match the cover");
  }
}

DetailedBranchingWord splice(const DetailedBranchingWord &dw, std::size_t begin, std::size_t end,
                             const std::vector<DetailedLetter> &replacement) {
  DetailedBranchingWord out;
  out.letters.reserve(dw.letters.size() - (end - begin) + replacement.size());
  out.letters.insert(out.letters.end(), dw.letters.begin(), dw.letters.begin() + static_cast<std::ptrdiff_t>(begin));
  out.letters.insert(out.letters.end(), replacement.begin(), replacement.end());
  out.letters.insert(out.letters.end(), dw.letters.begin() + static_cast<std::ptrdiff_t>(end), dw.letters.end());
  return out;
}

// Complementary run for Type 2, or nullopt when the rule does not apply.
std::optional<std::vector<DetailedLetter>> type2_replacement(const DetailedBranchingWord &dw, std::size_t position,
                                                             int k, const SurfaceCover &cover) {
  if (position >= dw.letters.size() || k < 2)
    return std::nullopt;
  const auto &first = dw.letters[position];
  const Permutation &perm = cover.cut(first.cut);
  const int n = perm.orbit_length(first.from);
  const std::size_t run = static_cast<std::size_t>(k - 1);
  if (k <= (n + 1) / 2 || k > n + 1 || position + run > dw.letters.size())
    return std::nullopt;
  for (std::size_t t = position; t < position + run; ++t) {
    const auto &l = dw.letters[t];
    if (l.cut != first.cut || l.sign != first.sign)
      return std::nullopt;
    if (t > position && l.from != dw.letters[t - 1].to)
      return std::nullopt;
  }
  std::vector<DetailedLetter> rep;
  int sheet = first.from;
  for (int t = 0; t < n - k + 1; ++t) {
    const int next = step(perm, -first.sign, sheet);
    rep.push_back({first.cut, -first.sign, sheet, next});
    sheet = next;
  }
  if (sheet != dw.letters[position + run - 1].to)
    throw InconsistentState("type 2 replacement does not end where the run does");
  return rep;
}

} // namespace

DetailedBranchingWord detail(const BranchingWord &bw, const SurfaceCover &sc, int start_sheet) {
  if (start_sheet < 0 || start_sheet >= sc.k)
    throw InvalidInput("start sheet " + std::to_string(start_sheet + 1) + " out of range 1.." + std::to_string(sc.k));
  DetailedBranchingWord out;
  int sheet = start_sheet;
  for (const auto &l : bw.letters) {
    const int next = step(sc.cut(l.cut), l.sign, sheet);
    out.letters.push_back({l.cut, l.sign, sheet, next});
    sheet = next;
  }
  return out;
}

DetailedBranchingWord rewrite_type0(const DetailedBranchingWord &dw, std::size_t position) {
  if (position >= dw.letters.size() || dw.letters[position].from != dw.letters[position].to)
    throw InvalidInput("type 0 needs a letter that stays on its sheet");
  return splice(dw, position, position + 1, {});
}

DetailedBranchingWord rewrite_type1(const DetailedBranchingWord &dw, std::size_t position) {
  if (position + 1 >= dw.letters.size())
    throw InvalidInput("type 1 needs two letters");
  const auto &a = dw.letters[position];
  const auto &b = dw.letters[position + 1];
  if (a.cut != b.cut || a.sign != -b.sign || a.from != b.to || a.to != b.from)
    throw InvalidInput("type 1 needs A^s_{ij} A^-s_{ji} on one cut");
  return splice(dw, position, position + 2, {});
}

DetailedBranchingWord rewrite_type2(const DetailedBranchingWord &dw, std::size_t position, int k,
                                    const SurfaceCover &cover) {
  auto rep = type2_replacement(dw, position, k, cover);
  if (!rep)
    throw InvalidInput("type 2 does not apply at position " + std::to_string(position) + " with k = " +
                       std::to_string(k));
  return splice(dw, position, position + static_cast<std::size_t>(k - 1), *rep);
}

std::vector<RewriteMove> rewrite_moves(const DetailedBranchingWord &dw, const SurfaceCover &cover) {
  std::vector<RewriteMove> out;
  const std::size_t len = dw.letters.size();
  for (std::size_t p = 0; p < len; ++p) {
    const auto &a = dw.letters[p];
    if (a.from == a.to)
      out.push_back({RewriteType::Type0, p, 0, splice(dw, p, p + 1, {})});
    if (p + 1 < len) {
      const auto &b = dw.letters[p + 1];
      if (a.cut == b.cut && a.sign == -b.sign && a.from == b.to && a.to == b.from)
        out.push_back({RewriteType::Type1, p, 0, splice(dw, p, p + 2, {})});
    }
  }
  for (std::size_t p = 0; p < len; ++p) {
    const int n = cover.cut(dw.letters[p].cut).orbit_length(dw.letters[p].from);
    for (int k = (n + 1) / 2 + 1; k <= n + 1; ++k) {
      auto rep = type2_replacement(dw, p, k, cover);
      if (!rep)
        break; // a longer run cannot match either
      out.push_back({RewriteType::Type2, p, k, splice(dw, p, p + static_cast<std::size_t>(k - 1), *rep)});
    }
  }
  return out;
}

bool is_irreducible(const DetailedBranchingWord &dw, const SurfaceCover &cover) {
  for (const auto &m : rewrite_moves(dw, cover))
    if (m.shortens(dw))
      return false;
  return true;
}

std::vector<ReducedBlock> reduced_blocks(const DetailedBranchingWord &dw, const SurfaceCover &cover) {
  validate(dw, cover);
  struct Run {
    int cut, from, turns, cycle;
  };
  std::vector<Run> stack;
  for (const auto &l : dw.letters) {
    // Chaining puts a same-cut letter in the cycle of the run below it.
    if (!stack.empty() && stack.back().cut == l.cut) {
      auto &top = stack.back();
      top.turns = ((top.turns + l.sign) % top.cycle + top.cycle) % top.cycle;
      if (top.turns == 0)
        stack.pop_back();
      continue;
    }
    const int n = cover.cut(l.cut).orbit_length(l.from);
    if (n > 1)
      stack.push_back({l.cut, l.from, (l.sign + n) % n, n});
  }
  std::vector<ReducedBlock> out;
  for (const auto &r : stack) {
    const int back = r.cycle - r.turns;
    if (r.turns <= back)
      out.push_back({r.cut, r.from, 1, r.turns, r.cycle, r.turns == back});
    else
      out.push_back({r.cut, r.from, -1, back, r.cycle, false});
  }
  return out;
}

namespace {

void spell(const ReducedBlock &b, int sign, const SurfaceCover &cover, std::vector<DetailedLetter> &out) {
  const Permutation &p = cover.cut(b.cut);
  int sheet = b.from;
  for (int t = 0; t < b.length; ++t) {
    const int next = step(p, sign, sheet);
    out.push_back({b.cut, sign, sheet, next});
    sheet = next;
  }
}

} // namespace

ReductionResult reduce_all(const DetailedBranchingWord &dw, const SurfaceCover &cover, std::size_t budget) {
  const auto blocks = reduced_blocks(dw, cover);
  ReductionResult res;
  std::size_t ties = 0;
  for (const auto &b : blocks)
    ties += b.tie;
  if (ties >= 63 || (std::size_t{1} << ties) > budget) {
    res.status = ReductionStatus::BudgetExhausted;
    return res;
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << ties); ++mask) {
    DetailedBranchingWord w;
    std::size_t bit = 0;
    for (const auto &b : blocks) {
      int sign = b.sign;
      if (b.tie && ((mask >> bit++) & 1))
        sign = -sign;
      spell(b, sign, cover, w.letters);
    }
    res.forms.insert(std::move(w));
  }
  res.visited = res.forms.size();
  return res;
}

std::vector<DetailedBranchingWord> reduction_path(const DetailedBranchingWord &from,
                                                  const DetailedBranchingWord &to, const SurfaceCover &cover,
                                                  std::size_t budget) {
  validate(from, cover);
  std::unordered_map<DetailedBranchingWord, DetailedBranchingWord, WordHash> parent;
  parent.emplace(from, from);
  std::deque<DetailedBranchingWord> queue{from};
  while (!queue.empty()) {
    DetailedBranchingWord w = std::move(queue.front());
    queue.pop_front();
    if (w == to) {
      std::vector<DetailedBranchingWord> path{w};
      while (!(path.back() == from))
        path.push_back(parent.at(path.back()));
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (auto &m : rewrite_moves(w, cover)) {
      if (parent.size() >= budget)
        return {};
      if (parent.emplace(m.result, w).second)
        queue.push_back(std::move(m.result));
    }
  }
  return {};
}

} // namespace veerkit
