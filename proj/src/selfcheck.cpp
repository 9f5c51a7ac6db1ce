#include "veerkit/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "veerkit/error.hpp"
#include "veerkit/rewrite.hpp"
#include "veerkit/word_problem.hpp"

namespace veerkit {

namespace {

int uniform(std::mt19937_64 &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Permutation random_permutation(std::mt19937_64 &rng, int k) {
  std::vector<int> img(static_cast<std::size_t>(k));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(std::move(img));
}

// FNV-1a, so per-property seeds do not depend on the standard library.
std::uint64_t mix(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string describe(const SurfaceCover &sc) {
  std::ostringstream os;
  os << "k=" << sc.k << " cuts=";
  for (const auto &p : sc.cuts)
    os << p << ' ';
  return os.str();
}

// Returns an empty string on success, else a description of the failing input.
using Check = std::function<std::string(std::mt19937_64 &)>;

std::string parse_roundtrip(std::mt19937_64 &rng) {
  const BraidWord w = random_braid(rng, 6, 20);
  if (parse_braid(w.to_string(), w.strands()) != w)
    return "word " + w.to_string();
  return {};
}

std::string permutation_homomorphism(std::mt19937_64 &rng) {
  const BraidWord a = random_braid(rng, 6, 12);
  const BraidWord b = random_braid(rng, a.strands(), 12).with_strands(a.strands());
  if (underlying_permutation(a.concat(b)) != underlying_permutation(a).then(underlying_permutation(b)))
    return a.to_string() + " | " + b.to_string();
  return {};
}

std::string stabilization_delta(std::mt19937_64 &rng) {
  BraidWord w = random_braid(rng, 5, 14);
  while (closure_component_count(w) != 1)
    w = random_braid(rng, 5, 14);
  const int sl = self_linking(w);
  if (self_linking(markov_stabilize(w, -1)) != sl - 2 || self_linking(markov_stabilize(w, 1)) != sl)
    return w.to_string();
  return {};
}

// Inserts a trivial factor (free cancellation, far commutation or the braid
// relation) at a random position.
BraidWord insert_relator(std::mt19937_64 &rng, const BraidWord &w) {
  const int b = w.strands();
  std::vector<int> rel;
  const int i = uniform(rng, 1, b - 1);
  const int kind = uniform(rng, 0, 2);
  if (kind == 0 || b < 3) {
    const int s = uniform(rng, 0, 1) ? 1 : -1;
    rel = {s * i, -s * i};
  } else if (kind == 1 && b >= 4) {
    const int lo = uniform(rng, 1, b - 3);
    const int hi = uniform(rng, lo + 2, b - 1);
    rel = {lo, hi, -lo, -hi};
  } else {
    const int a = std::min(i, b - 2);
    rel = {a, a + 1, a, -(a + 1), -a, -(a + 1)};
  }
  std::vector<int> letters = w.signed_letters();
  const auto pos = static_cast<std::ptrdiff_t>(uniform(rng, 0, static_cast<int>(letters.size())));
  letters.insert(letters.begin() + pos, rel.begin(), rel.end());
  return BraidWord::from_signed(b, letters);
}

std::string braid_equal_moves(std::mt19937_64 &rng) {
  BraidWord w = random_braid(rng, 5, 10);
  if (w.strands() < 2)
    w = w.with_strands(2);
  BraidWord v = w;
  const int moves = uniform(rng, 1, 4);
  for (int t = 0; t < moves; ++t)
    v = insert_relator(rng, v);
  const BraidWord u = insert_relator(rng, v);
  const bool ok = braid_equal(w, v) && braid_equal(v, w) && braid_equal(v, u) && braid_equal(w, u) &&
                  braid_equal(w, w) && underlying_permutation(w) == underlying_permutation(v) &&
                  !braid_equal(w, v.concat(BraidWord(w.strands(), {1})));
  return ok ? std::string{} : w.to_string() + " ~ " + v.to_string();
}

std::string detail_roundtrip(std::mt19937_64 &rng) {
  const SurfaceCover sc = random_cover(rng, 5, 4);
  const BranchingWord bw = random_branching_word(rng, sc.cut_count(), 14);
  const DetailedBranchingWord dw = detail(bw, sc, uniform(rng, 0, sc.k - 1));
  if (!dw.is_chained() || dw.undecorated() != bw)
    return describe(sc) + to_string(bw);
  return {};
}

std::string sheet_consistency(std::mt19937_64 &rng) {
  const SurfaceCover sc = random_cover(rng, 5, 4);
  const BranchingWord bw = random_branching_word(rng, sc.cut_count(), 14);
  const int start = uniform(rng, 0, sc.k - 1);
  Permutation total(static_cast<std::size_t>(sc.k));
  for (const auto &l : bw.letters) {
    const auto &p = sc.cut(l.cut);
    total = (l.sign > 0 ? p : p.inverse()) * total;
  }
  const auto dw = detail(bw, sc, start);
  const int end = dw.empty() ? start : dw.letters.back().to;
  if (end != total(start))
    return describe(sc) + to_string(bw);
  return {};
}

bool same_endpoints(const DetailedBranchingWord &before, const DetailedBranchingWord &after) {
  if (before.empty())
    return after.empty();
  const int from = before.letters.front().from;
  const int to = before.letters.back().to;
  if (after.empty())
    return from == to;
  return after.letters.front().from == from && after.letters.back().to == to;
}

// A random word with an inverse pair spliced in, so every rewrite type
// shows up often.
DetailedBranchingWord random_detailed(std::mt19937_64 &rng, const SurfaceCover &sc) {
  BranchingWord bw = random_branching_word(rng, sc.cut_count(), 12);
  const CutLetter l{uniform(rng, 1, sc.cut_count()), uniform(rng, 0, 1) ? 1 : -1};
  const auto pos = static_cast<std::ptrdiff_t>(uniform(rng, 0, static_cast<int>(bw.size())));
  bw.letters.insert(bw.letters.begin() + pos, {l, l.inverse()});
  return detail(bw, sc, uniform(rng, 0, sc.k - 1));
}

std::string rewrite_endpoints(std::mt19937_64 &rng) {
  const SurfaceCover sc = random_cover(rng, 5, 3);
  const auto dw = random_detailed(rng, sc);
  for (const auto &m : rewrite_moves(dw, sc))
    if (!m.result.is_chained() || !same_endpoints(dw, m.result))
      return describe(sc) + to_string(dw);
  return {};
}

std::string reduce_idempotence(std::mt19937_64 &rng) {
  const SurfaceCover sc = random_cover(rng, 5, 3);
  const auto dw = random_detailed(rng, sc);
  const auto red = reduce_all(dw, sc);
  if (red.status != ReductionStatus::Complete || red.forms.empty())
    return describe(sc) + to_string(dw);
  // Ties make the set 2^t large; re-reduce the first and last members and
  // a random one.
  std::vector<const DetailedBranchingWord *> probe{&*red.forms.begin(), &*red.forms.rbegin()};
  probe.push_back(&*std::next(red.forms.begin(), uniform(rng, 0, static_cast<int>(red.forms.size()) - 1)));
  for (const auto *f : probe) {
    if (!is_irreducible(*f, sc) || !same_endpoints(dw, *f))
      return describe(sc) + to_string(dw);
    const auto again = reduce_all(*f, sc);
    if (!std::includes(red.forms.begin(), red.forms.end(), again.forms.begin(), again.forms.end()))
      return describe(sc) + to_string(dw);
  }
  return {};
}

std::string rewrite_types_coincide(std::mt19937_64 &rng) {
  const SurfaceCover sc = random_cover(rng, 5, 3);
  const auto dw = random_detailed(rng, sc);
  for (const auto &m : rewrite_moves(dw, sc)) {
    const auto &l = dw.letters[m.position];
    const int n = sc.cut(l.cut).orbit_length(l.from);
    if (m.type == RewriteType::Type0 && rewrite_type2(dw, m.position, 2, sc) != m.result)
      return describe(sc) + to_string(dw);
    // On a transposition, Type 1 is a half turn respelled and then a full turn removed.
    if (m.type == RewriteType::Type1 && n == 2 &&
        rewrite_type2(rewrite_type2(dw, m.position, 2, sc), m.position, 3, sc) != m.result)
      return describe(sc) + to_string(dw);
  }
  return {};
}

std::string propagate_conjugacy(std::mt19937_64 &rng) {
  const BraidWord w = random_braid(rng, 5, 12);
  const int k = uniform(rng, 1, 5);
  Coloring c{k, {}};
  for (int j = 0; j < w.strands(); ++j)
    c.initial.push_back(random_permutation(rng, k));
  for (const auto &level : propagate(w, c).levels)
    for (const auto &p : level) {
      const bool conj = std::any_of(c.initial.begin(), c.initial.end(),
                                    [&](const Permutation &q) { return q.cycle_type() == p.cycle_type(); });
      if (!conj)
        return w.to_string();
    }
  return {};
}

std::string page_invariants(std::mt19937_64 &rng) {
  SurfaceCover sc = random_cover(rng, 6, 4);
  while (!generates_transitive(sc.cuts, static_cast<std::size_t>(sc.k)))
    sc = random_cover(rng, 6, 4);
  try {
    const auto inv = lifted_page_invariants(sc);
    if (inv.euler != 2 - 2 * inv.genus - inv.boundary || inv.genus < 0)
      return describe(sc);
  } catch (const InconsistentState &) {
    return describe(sc);
  }
  return {};
}

const std::map<std::string, Check, std::less<>> &registry() {
  static const std::map<std::string, Check, std::less<>> r{
      {"parse-roundtrip", parse_roundtrip},
      {"permutation-homomorphism", permutation_homomorphism},
      {"stabilization-delta", stabilization_delta},
      {"braid-equal-moves", braid_equal_moves},
      {"detail-roundtrip", detail_roundtrip},
      {"sheet-consistency", sheet_consistency},
      {"rewrite-endpoints", rewrite_endpoints},
      {"reduce-idempotence", reduce_idempotence},
      {"rewrite-types-coincide", rewrite_types_coincide},
      {"propagate-conjugacy", propagate_conjugacy},
      {"page-invariants", page_invariants},
  };
  return r;
}

} // namespace

BraidWord random_braid(std::mt19937_64 &rng, int max_strands, int max_letters) {
  const int b = uniform(rng, 2, std::max(2, max_strands));
  const int len = uniform(rng, 0, max_letters);
  std::vector<int> letters;
  for (int t = 0; t < len; ++t)
    letters.push_back(uniform(rng, 1, b - 1) * (uniform(rng, 0, 1) ? 1 : -1));
  return BraidWord::from_signed(b, letters);
}

SurfaceCover random_cover(std::mt19937_64 &rng, int max_k, int max_cuts) {
  SurfaceCover sc{uniform(rng, 1, max_k), {}};
  const int cuts = uniform(rng, 1, max_cuts);
  for (int j = 0; j < cuts; ++j)
    sc.cuts.push_back(random_permutation(rng, sc.k));
  return sc;
}

BranchingWord random_branching_word(std::mt19937_64 &rng, int cuts, int max_letters) {
  BranchingWord w;
  const int len = uniform(rng, 0, max_letters);
  for (int t = 0; t < len; ++t)
    w.letters.push_back({uniform(rng, 1, cuts), uniform(rng, 0, 1) ? 1 : -1});
  return w;
}

std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const auto &[name, check] : registry())
    out.push_back(name);
  return out;
}

PropertyResult run_property(std::string_view name, std::uint64_t seed, std::size_t cases) {
  const auto it = registry().find(name);
  if (it == registry().end())
    throw InvalidInput("unknown property '" + std::string(name) + "'");
  std::mt19937_64 rng(mix(seed, name));
  PropertyResult res{std::string(name), cases, 0, {}};
  for (std::size_t t = 0; t < cases; ++t) {
    std::string failure = it->second(rng);
    if (!failure.empty() && res.failures++ == 0)
      res.first_failure = std::move(failure);
  }
  return res;
}

std::vector<PropertyResult> run_selfcheck(std::uint64_t seed, std::size_t cases) {
  std::vector<PropertyResult> out;
  for (const auto &name : property_names())
    out.push_back(run_property(name, seed, cases));
  return out;
}

} // namespace veerkit
