#include "veerkit/covering.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "veerkit/error.hpp"

namespace veerkit {

const Permutation &SurfaceCover::cut(int j) const {
  if (j < 1 || j > cut_count())
    throw InvalidInput("cut index " + std::to_string(j) + " out of range");
  return cuts[static_cast<std::size_t>(j - 1)];
}

Coloring cyclic_coloring(int strands, int k) {
  return {k, std::vector<Permutation>(static_cast<std::size_t>(strands),
                                      Permutation::cycle(static_cast<std::size_t>(k)))};
}

namespace {

void check_coloring(const BraidWord &w, const Coloring &c) {
  if (static_cast<int>(c.initial.size()) != w.strands())
    throw InvalidInput("coloring has " + std::to_string(c.initial.size()) + " colors for " +
                       std::to_string(w.strands()) + " strands");
  for (const auto &p : c.initial)
    if (static_cast<int>(p.degree()) != c.k)
      throw InvalidInput("coloring permutation of degree " + std::to_string(p.degree()) + ", expected " +
                         std::to_string(c.k));
}

} // namespace

Propagation propagate(const BraidWord &w, const Coloring &c) {
  check_coloring(w, c);
  Propagation out;
  std::vector<Permutation> cur = c.initial;
  out.levels.push_back(cur);
  for (const auto &l : w.letters()) {
    auto &x = cur[static_cast<std::size_t>(l.index - 1)];
    auto &y = cur[static_cast<std::size_t>(l.index)];
    if (l.sign > 0) {
      Permutation z = y.conjugated_by(x);
      y = x;
      x = std::move(z);
    } else {
      Permutation z = x.conjugated_by(y.inverse());
      x = y;
      y = std::move(z);
    }
    out.levels.push_back(cur);
  }
  out.final = std::move(cur);
  return out;
}

bool is_valid_cover(const BraidWord &w, const Coloring &c) {
  check_coloring(w, c);
  if (propagate(w, c).final != c.initial)
    return false;
  return generates_transitive(c.initial, static_cast<std::size_t>(c.k));
}

namespace {

// g p g^-1 written into `out`.
void conjugate_into(const Permutation &p, const std::vector<int> &g, std::vector<int> &out) {
  for (std::size_t x = 0; x < g.size(); ++x)
    out[static_cast<std::size_t>(g[x])] = g[static_cast<std::size_t>(p(static_cast<int>(x)))];
}

Coloring canonical_form_over(const Coloring &c, const std::vector<Permutation> &group) {
  const std::size_t k = static_cast<std::size_t>(c.k);
  std::vector<std::vector<int>> best;
  for (const auto &p : c.initial)
    best.push_back(p.images());
  std::vector<int> buf(k);
  for (const auto &g : group) {
    // Compare colors one at a time and stop at the first difference.
    for (std::size_t j = 0; j < c.initial.size(); ++j) {
      conjugate_into(c.initial[j], g.images(), buf);
      if (buf < best[j]) {
        best[j] = buf;
        for (std::size_t t = j + 1; t < c.initial.size(); ++t) {
          best[t].assign(k, 0);
          conjugate_into(c.initial[t], g.images(), best[t]);
        }
        break;
      }
      if (buf > best[j])
        break;
    }
  }
  Coloring out{c.k, {}};
  for (auto &imgs : best)
    out.initial.push_back(Permutation::from_images(std::move(imgs)));
  return out;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// value(z) = value(x) value(y) value(x)^-1
struct Relation {
  int z, x, y;
};

class CoverSearch {
public:
  CoverSearch(const BraidWord &w, int k) : w_(w), k_(k) { build(); }

  std::vector<Coloring> run() {
    group_ = symmetric_group(static_cast<std::size_t>(k_));
    std::map<std::vector<int>, std::vector<Permutation>> by_type;
    for (const auto &g : group_)
      by_type[g.cycle_type()].push_back(g);

    for (const auto &type : partitions(k_)) {
      std::vector<std::optional<Permutation>> val(static_cast<std::size_t>(classes_));
      const int first = strand_class_[0];
      val[static_cast<std::size_t>(first)] = class_representative(type);
      candidates_.assign(static_cast<std::size_t>(classes_), &group_);
      for (int v = 0; v < classes_; ++v)
        if (component_[static_cast<std::size_t>(v)] == component_[static_cast<std::size_t>(first)])
          candidates_[static_cast<std::size_t>(v)] = &by_type[type];
      search(std::move(val));
    }
    return {found_.begin(), found_.end()};
  }

private:
  void build() {
    const int b = w_.strands();
    std::vector<int> pos(static_cast<std::size_t>(b));
    std::iota(pos.begin(), pos.end(), 0);
    int arcs = b;
    std::vector<Relation> rels;
    for (const auto &l : w_.letters()) {
      int &x = pos[static_cast<std::size_t>(l.index - 1)];
      int &y = pos[static_cast<std::size_t>(l.index)];
      const int z = arcs++;
      if (l.sign > 0) {
        rels.push_back({z, x, y});
        y = x;
        x = z;
      } else {
        // new color z = y^-1 x y, i.e. x = y z y^-1
        rels.push_back({x, y, z});
        x = y;
        y = z;
      }
    }
    DisjointSets arc_sets(static_cast<std::size_t>(arcs));
    for (int p = 0; p < b; ++p)
      arc_sets.unite(pos[static_cast<std::size_t>(p)], p);

    std::map<int, int> root_to_class;
    auto cls = [&](int arc) {
      const int r = arc_sets.find(arc);
      auto [it, inserted] = root_to_class.try_emplace(r, static_cast<int>(root_to_class.size()));
      return it->second;
    };
    for (int p = 0; p < b; ++p)
      strand_class_.push_back(cls(p));
    for (const auto &r : rels)
      rels_.push_back({cls(r.z), cls(r.x), cls(r.y)});
    for (int a = 0; a < arcs; ++a)
      cls(a);
    classes_ = static_cast<int>(root_to_class.size());

    DisjointSets comp(static_cast<std::size_t>(classes_));
    for (const auto &r : rels_)
      comp.unite(r.z, r.y);
    for (int v = 0; v < classes_; ++v)
      component_.push_back(comp.find(v));
  }

  // Fills every value forced by the relations; false on contradiction.
  bool propagate_values(std::vector<std::optional<Permutation>> &val) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto &r : rels_) {
        auto &z = val[static_cast<std::size_t>(r.z)];
        auto &x = val[static_cast<std::size_t>(r.x)];
        auto &y = val[static_cast<std::size_t>(r.y)];
        if (x && y) {
          Permutation v = y->conjugated_by(*x);
          if (!z) {
            z = std::move(v);
            changed = true;
          } else if (*z != v) {
            return false;
          }
        } else if (x && z) {
          y = z->conjugated_by(x->inverse());
          changed = true;
        }
      }
    }
    return true;
  }

  // Prefer a variable whose value would immediately force another one.
  int choose(const std::vector<std::optional<Permutation>> &val) const {
    for (const auto &r : rels_) {
      const bool x = val[static_cast<std::size_t>(r.x)].has_value();
      const bool y = val[static_cast<std::size_t>(r.y)].has_value();
      if (x && !y)
        return r.y;
      if (!x && y)
        return r.x;
    }
    for (int v = 0; v < classes_; ++v)
      if (!val[static_cast<std::size_t>(v)])
        return v;
    return -1;
  }

  void search(std::vector<std::optional<Permutation>> val) {
    if (!propagate_values(val))
      return;
    const int v = choose(val);
    if (v < 0) {
      Coloring c{k_, {}};
      for (int s : strand_class_)
        c.initial.push_back(*val[static_cast<std::size_t>(s)]);
      if (is_valid_cover(w_, c))
        found_.insert(canonical_form_over(c, group_));
      return;
    }
    for (const auto &p : *candidates_[static_cast<std::size_t>(v)]) {
      auto next = val;
      next[static_cast<std::size_t>(v)] = p;
      search(std::move(next));
    }
  }

  const BraidWord &w_;
  int k_;
  int classes_ = 0;
  std::vector<int> strand_class_;
  std::vector<Relation> rels_;
  std::vector<int> component_;
  std::vector<Permutation> group_;
  std::vector<const std::vector<Permutation> *> candidates_;
  std::set<Coloring> found_;
};

} // namespace

Coloring canonical_form(const Coloring &c) {
  return canonical_form_over(c, symmetric_group(static_cast<std::size_t>(c.k)));
}

std::vector<Coloring> enumerate_covers(const BraidWord &w, int k) {
  if (k < 1)
    throw InvalidInput("cover degree must be >= 1");
  return CoverSearch(w, k).run();
}

std::optional<int> check_condition(const Coloring &c, const ConditionSpec &spec) {
  const int n = spec.n;
  if (spec.case_no < 1 || spec.case_no > 3)
    throw InvalidInput("condition case must be 1, 2 or 3");
  if (n < 1 || static_cast<int>(c.initial.size()) != n + 2)
    throw InvalidInput("condition for n = " + std::to_string(n) + " needs " + std::to_string(n + 2) +
                       " colors, got " + std::to_string(c.initial.size()));
  auto a = [&](int j) -> const Permutation & { return c.initial[static_cast<std::size_t>(j - 1)]; };
  for (int i = 0; i < c.k; ++i) {
    int y = i;
    bool first = false;
    bool second = false;
    switch (spec.case_no) {
    case 1: // a_{n+1}(i) != i;  a_{n+2} moves a_{n+1}...a_1(i)
      first = a(n + 1).moves(i);
      for (int j = 1; j <= n + 1; ++j)
        y = a(j)(y);
      second = a(n + 2).moves(y);
      break;
    case 2: // a_n(i) != i;  a_{n+1} moves a_n...a_1 a_{n+2}(i)
      first = a(n).moves(i);
      y = a(n + 2)(y);
      for (int j = 1; j <= n; ++j)
        y = a(j)(y);
      second = a(n + 1).moves(y);
      break;
    case 3: // a_{n+1}(i) != i;  a_{n+1} moves a_{n+2}^-1 a_1^-1 ... a_n^-1(i)
      first = a(n + 1).moves(i);
      for (int j = n; j >= 1; --j)
        y = a(j).inverse()(y);
      y = a(n + 2).inverse()(y);
      second = a(n + 1).moves(y);
      break;
    }
    if (first && second)
      return i;
  }
  return std::nullopt;
}

PageInvariants lifted_page_invariants(const SurfaceCover &sc) {
  const auto k = static_cast<std::size_t>(sc.k);
  Permutation boundary(k);
  int euler = sc.k;
  for (const auto &p : sc.cuts) {
    if (p.degree() != k)
      throw InvalidInput("cut permutation degree does not match the cover");
    euler -= sc.k - static_cast<int>(p.cycle_count());
    boundary = p * boundary;
  }
  const int bd = static_cast<int>(boundary.cycle_count());
  const int twice_genus = 2 - euler - bd;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw InconsistentState("lifted page has euler " + std::to_string(euler) + " and " + std::to_string(bd) +
                            " boundary components: no integral genus");
  return {euler, bd, twice_genus / 2};
}

} // namespace veerkit
