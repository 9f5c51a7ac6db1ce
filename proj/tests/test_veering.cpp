#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "veerkit/artin.hpp"
#include "veerkit/error.hpp"
#include "veerkit/rewrite.hpp"
#include "veerkit/selfcheck.hpp"
#include "veerkit/twist_knots.hpp"
#include "veerkit/veering.hpp"

using namespace veerkit;

namespace {

Permutation cyc(const char *text, int k) { return Permutation::parse_cycles(text, static_cast<std::size_t>(k)); }

SurfaceCover example_cover() {
  return {7, {cyc("(1 6)(2 4)(3 7)", 7), cyc("(1 2)(3 4)(5 6)", 7), cyc("(2 3)(4 5)(6 7)", 7)}};
}

DetailedBranchingWord dw(const char *text) { return parse_detailed_word(text); }

const char *kExampleWord = "A2 A3 A1 A2 A3 A2' A1' A2 A1 A2 A3'";
const char *kExampleDetailed = "A2{6->5} A3{5->4} A1{4->2} A2{2->1} A3{1->1} A2{1->2}' A1{2->4}' A2{4->3} "
                               "A1{3->7} A2{7->7} A3{7->6}'";
const char *kExampleReduced = "A2{6->5} A3{5->4} A2{4->3} A1{3->7} A3{7->6}'";

// One cut whose permutation is the given cycle on k sheets.
SurfaceCover one_cut(const char *cycle, int k) { return {k, {cyc(cycle, k)}}; }

} // namespace

TEST_CASE("branching word text") {
  const BranchingWord w = parse_branching_word("A2 A3' A1^-1");
  REQUIRE(w.size() == 3);
  CHECK(w.letters[1] == CutLetter{3, -1});
  CHECK(to_string(w) == "A2 A3' A1'");
  CHECK(parse_branching_word("").empty());
  CHECK_THROWS_AS(parse_branching_word("B2"), InvalidInput);
  CHECK_THROWS_AS(parse_branching_word("A0"), InvalidInput);
  CHECK(to_string(dw(kExampleDetailed)) == kExampleDetailed);
  CHECK_THROWS_AS(parse_detailed_word("A2{0->1}"), InvalidInput);
  CHECK(parse_branching_word("A1 A2 A2' A1' A3").freely_reduced() == parse_branching_word("A3"));
}

TEST_CASE("artin_image") {
  CHECK(artin_image(BraidWord(3, {}), 2).empty());
  CHECK(artin_image(twist_braid(twist_spec(2)), 1) == parse_branching_word("A2' A1 A2 A3' A2' A1' A2 A1"));
  CHECK(artin_image(twist_braid(twist_spec(3)), 3) == parse_branching_word("A2' A1' A3' A2' A3 A1 A2 A3"));
  CHECK_THROWS_AS(artin_image(BraidWord(3, {}), 4), InvalidInput);
  CHECK_THROWS_AS(artin_image(BraidWord(3, {}), 0), InvalidInput);
}

TEST_CASE("artin_image reproduces the closed-form branching words") {
  for (int n = 1; n <= 4; ++n)
    for (int m : {2 * n, -(2 * n + 1), 2 * n + 1}) {
      const auto spec = twist_spec(m);
      const auto t = expected_branching_word(spec);
      INFO("m=", m);
      CHECK(artin_image(twist_braid(spec), t.designated_cut) == t.word);
    }
}

TEST_CASE("artin images agree with the free-group oracle") {
  std::mt19937_64 rng(oracle::seed());
  for (int t = 0; t < 200; ++t) {
    const BraidWord w = random_braid(rng, 6, 12);
    const FreeAutomorphism phi(w);
    const auto want = oracle::artin_images(w);
    for (int j = 1; j <= w.strands(); ++j) {
      std::vector<int> got;
      for (const auto &l : phi.image(j).letters)
        got.push_back(l.sign * l.cut);
      CHECK(got == want[static_cast<std::size_t>(j - 1)]);
      CHECK(artin_image(w, j).is_freely_reduced());
    }
  }
}

TEST_CASE("detail") {
  const SurfaceCover sc = example_cover();
  CHECK(detail(parse_branching_word(kExampleWord), sc, 5) == dw(kExampleDetailed));
  CHECK(detail(BranchingWord{}, sc, 0).empty());
  CHECK(detail(parse_branching_word("A1"), one_cut("(1 2)", 2), 0) == dw("A1{1->2}"));
  CHECK_THROWS_AS(detail(parse_branching_word("A1"), sc, 7), InvalidInput);
  CHECK_THROWS_AS(detail(parse_branching_word("A4"), sc, 0), InvalidInput);
}

TEST_CASE("rewrite_type0") {
  CHECK(rewrite_type0(dw("A3{1->1}"), 0).empty());
  CHECK_THROWS_AS(rewrite_type0(dw("A1{1->2}"), 0), InvalidInput);
  CHECK(rewrite_type0(dw("A2{6->5} A3{5->5}' A1{5->3}"), 1) == dw("A2{6->5} A1{5->3}"));
}

TEST_CASE("rewrite_type1") {
  CHECK(rewrite_type1(dw("A1{1->2} A1{2->1}'"), 0).empty());
  CHECK(rewrite_type1(dw("A3{1->1} A2{1->2} A2{2->1}'"), 1) == dw("A3{1->1}"));
  CHECK_THROWS_AS(rewrite_type1(dw("A1{1->2} A2{2->1}'"), 0), InvalidInput);
}

TEST_CASE("rewrite_type2") {
  const SurfaceCover three = one_cut("(1 2 3)", 3);
  CHECK(rewrite_type2(dw("A1{1->2} A1{2->3}"), 0, 3, three) == dw("A1{1->3}'"));
  const SurfaceCover five = one_cut("(1 2 3 4 5)", 5);
  CHECK(rewrite_type2(dw("A1{1->2} A1{2->3} A1{3->4} A1{4->5}"), 0, 5, five) == dw("A1{1->5}'"));
  CHECK_THROWS_AS(rewrite_type2(dw("A1{1->2}"), 0, 2, three), InvalidInput);
  // a full turn disappears
  CHECK(rewrite_type2(dw("A1{1->2} A1{2->3} A1{3->1}"), 0, 4, three).empty());
}

TEST_CASE("rewrite types coincide where they overlap") {
  const SurfaceCover two = one_cut("(1 2)", 2);
  const auto w = dw("A1{1->2} A1{2->1}");
  CHECK(rewrite_type2(w, 0, 3, two).empty());
  const PropertyResult r = run_property("rewrite-types-coincide", oracle::seed(), 300);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("reduce_all") {
  const SurfaceCover sc = example_cover();
  const auto r = reduce_all(dw(kExampleDetailed), sc);
  CHECK(r.status == ReductionStatus::Complete);
  CHECK(r.forms.count(dw(kExampleReduced)) == 1);
  for (const auto &f : r.forms) {
    CHECK(f.size() == 5);
    CHECK(is_irreducible(f, sc));
  }

  const auto empty = reduce_all(DetailedBranchingWord{}, sc);
  CHECK(empty.forms == std::set<DetailedBranchingWord>{DetailedBranchingWord{}});
  CHECK(reduce_all(dw("A1{1->2} A1{2->1}'"), one_cut("(1 2)", 2)).forms ==
        std::set<DetailedBranchingWord>{DetailedBranchingWord{}});

  const auto capped = reduce_all(dw(kExampleDetailed), sc, 4);
  CHECK(capped.status == ReductionStatus::BudgetExhausted);
  CHECK(capped.forms.empty());
}

TEST_CASE("reduction_path reaches the reduced example word") {
  const SurfaceCover sc = example_cover();
  const auto path = reduction_path(dw(kExampleDetailed), dw(kExampleReduced), sc);
  REQUIRE(path.size() >= 2);
  CHECK(path.front() == dw(kExampleDetailed));
  CHECK(path.back() == dw(kExampleReduced));
  for (std::size_t i = 1; i < path.size(); ++i) {
    bool step = false;
    for (const auto &mv : rewrite_moves(path[i - 1], sc))
      step = step || mv.result == path[i];
    CHECK(step);
  }
}

TEST_CASE("reduce_all agrees with exhaustive search") {
  std::mt19937_64 rng(oracle::seed());
  int compared = 0;
  for (int t = 0; t < 400; ++t) {
    const SurfaceCover sc = random_cover(rng, 4, 3);
    const BranchingWord bw = random_branching_word(rng, sc.cut_count(), 8);
    const auto start = std::uniform_int_distribution<int>(0, sc.k - 1)(rng);
    const DetailedBranchingWord w = detail(bw, sc, start);
    const auto want = oracle::exhaustive_irreducible(w, sc, 20000);
    if (!want)
      continue;
    ++compared;
    const auto got = reduce_all(w, sc);
    INFO(to_string(w));
    CHECK(got.status == ReductionStatus::Complete);
    CHECK(got.forms == *want);
  }
  CHECK(compared >= 300);
}

TEST_CASE("branching calculus properties") {
  for (const char *name : {"detail-roundtrip", "sheet-consistency", "rewrite-endpoints", "reduce-idempotence"}) {
    const PropertyResult r = run_property(name, oracle::seed(), 300);
    INFO(name, ": ", r.first_failure);
    CHECK(r.ok());
  }
}

TEST_CASE("left_veering_witness") {
  const BraidWord m2 = twist_braid(twist_spec(2));
  const auto covers = enumerate_covers(m2, 2);
  REQUIRE(covers.size() == 1);
  const VeeringReport r = left_veering_witness(m2, covers[0]);
  CHECK(r.verdict == Verdict::LeftVeering);
  REQUIRE(r.witness.has_value());
  CHECK_FALSE(r.witness->irreducible.empty());
  for (const auto &f : r.witness->irreducible) {
    REQUIRE_FALSE(f.empty());
    CHECK((f.letters[0].cut != r.witness->cut || f.letters[0].sign < 0));
  }

  const auto id = Permutation(1);
  CHECK(left_veering_witness(m2, {1, {id, id, id}}).verdict == Verdict::NoWitnessFound);

  const BraidWord m4 = twist_braid(twist_spec(-4));
  const VeeringReport q = left_veering_witness(m4, cyclic_coloring(3, 2));
  CHECK(q.verdict == Verdict::NoWitnessFound);
  CHECK_FALSE(q.witness.has_value());
  CHECK(q.explored_cuts == std::vector<int>{1, 2, 3});

  const auto t = cyc("(1 2)", 2);
  CHECK_THROWS_AS(left_veering_witness(m2, {2, {t, Permutation(2), Permutation(2)}}), InvalidInput);
}

TEST_CASE("witness test on reduced forms") {
  const std::set<DetailedBranchingWord> starts_other{dw("A2{1->2} A1{2->1}")};
  CHECK(witnesses_left_veering(starts_other, 1, false));
  CHECK_FALSE(witnesses_left_veering(starts_other, 2, false));
  const std::set<DetailedBranchingWord> negative{dw("A1{2->1}' A2{1->2}")};
  CHECK(witnesses_left_veering(negative, 1, false));
  CHECK_FALSE(witnesses_left_veering(negative, 1, true));
  CHECK_FALSE(witnesses_left_veering(std::set<DetailedBranchingWord>{DetailedBranchingWord{}}, 1, false));
}

TEST_CASE("every nontrivial cover of the non-quasipositive families is left-veering") {
  for (int m : {2, 3, 4, 5, -3, -5}) {
    const BraidWord w = twist_braid(twist_spec(m));
    for (int k = 2; k <= 5; ++k)
      for (const auto &c : enumerate_covers(w, k)) {
        INFO("m=", m, " k=", k);
        const auto r = left_veering_witness(w, c);
        CHECK(r.verdict == Verdict::LeftVeering);
        CHECK_FALSE(r.sign_sensitive);
      }
  }
}

TEST_CASE("cyclic covers of quasipositive representatives have no witness") {
  for (int m : {-4, -6, -8})
    for (int l = 1; l <= (-m / 2 + 1) / 2; ++l) {
      const BraidWord w = twist_braid(twist_spec(m, l));
      for (int k = 2; k <= 4; ++k) {
        INFO("m=", m, " l=", l, " k=", k);
        const auto r = left_veering_witness(w, cyclic_coloring(w.strands(), k));
        CHECK(r.verdict == Verdict::NoWitnessFound);
        CHECK_FALSE(r.inconclusive_reason.has_value());
      }
    }
}
