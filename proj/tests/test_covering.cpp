#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "veerkit/error.hpp"
#include "veerkit/selfcheck.hpp"
#include "veerkit/twist_knots.hpp"

using namespace veerkit;

namespace {

Permutation cyc(const char *text, int k) { return Permutation::parse_cycles(text, static_cast<std::size_t>(k)); }

SurfaceCover example_cover() {
  return {7, {cyc("(1 6)(2 4)(3 7)", 7), cyc("(1 2)(3 4)(5 6)", 7), cyc("(2 3)(4 5)(6 7)", 7)}};
}

ConditionSpec condition_for(int m) {
  const auto s = twist_spec(m);
  const int c = s.family == TwistFamily::EvenPositive ? 1 : s.family == TwistFamily::OddNegative ? 2 : 3;
  return {c, family_n(s)};
}

} // namespace

TEST_CASE("propagate") {
  const auto x = cyc("(1 2 3)", 3), y = cyc("(1 2)", 3);
  CHECK(propagate(BraidWord(2, {}), {3, {x, y}}).final == std::vector{x, y});
  const auto p = propagate(BraidWord(2, {1}), {3, {x, y}});
  CHECK(p.final == std::vector{x * y * x.inverse(), x});
  REQUIRE(p.levels.size() == 2);
  CHECK(p.levels[0] == std::vector{x, y});
  CHECK(propagate(BraidWord(2, {-1}), {3, {x, y}}).final == std::vector{y, y.inverse() * x * y});

  const auto t = cyc("(1 2)", 2);
  CHECK(propagate(twist_braid(twist_spec(2)), {2, {t, t, t}}).final == std::vector{t, t, t});
  CHECK_THROWS_AS(propagate(BraidWord(3, {}), {2, {t}}), InvalidInput);
}

TEST_CASE("is_valid_cover") {
  const BraidWord w = twist_braid(twist_spec(2));
  const auto t = cyc("(1 2)", 2), e = Permutation(2);
  CHECK(is_valid_cover(w, {1, {Permutation(1), Permutation(1), Permutation(1)}}));
  CHECK(is_valid_cover(w, {2, {t, t, t}}));
  CHECK_FALSE(is_valid_cover(w, {2, {t, e, e}}));
}

TEST_CASE("enumerate_covers fixtures") {
  const BraidWord w = twist_braid(twist_spec(2));
  CHECK(enumerate_covers(w, 1).size() == 1);
  const auto two = enumerate_covers(w, 2);
  REQUIRE(two.size() == 1);
  const auto t = cyc("(1 2)", 2);
  CHECK(two[0] == Coloring{2, {t, t, t}});
  for (const auto &c : enumerate_covers(w, 3))
    for (const auto &a : c.initial)
      CHECK(a.cycle_type() != std::vector<int>{2, 1});
}

TEST_CASE("enumerate_covers matches brute force") {
  for (int m : {2, 3, -3, 4, -4, -5, 5}) {
    const BraidWord w = twist_braid(twist_spec(m));
    for (int k = 1; k <= (w.strands() <= 3 ? 4 : 3); ++k) {
      const auto got = enumerate_covers(w, k);
      const auto want = oracle::brute_force_covers(w, k);
      INFO("m=", m, " k=", k);
      CHECK(std::set<Coloring>(got.begin(), got.end()) == want);
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(got.size() == want.size());
      CHECK(enumerate_covers(w, k) == got);
    }
  }
}

TEST_CASE("canonical_form matches brute force") {
  std::mt19937_64 rng(oracle::seed());
  for (int t = 0; t < 200; ++t) {
    const SurfaceCover sc = random_cover(rng, 5, 4);
    const Coloring c{sc.k, sc.cuts};
    CHECK(canonical_form(c) == oracle::brute_force_canonical(c));
  }
}

TEST_CASE("relation systems of the odd families") {
  // 4 strands each, n = 2
  for (int k = 1; k <= 4; ++k) {
    INFO("k=", k);
    std::set<std::vector<Permutation>> valid;
    for (const auto &t : oracle::valid_tuples(twist_braid(twist_spec(-5)), k))
      valid.insert(oracle::diagram_labels(t));
    CHECK(valid == oracle::system_solutions([](const auto &a) { return oracle::odd_negative_system(a, 2); }, 4, k));

    valid.clear();
    for (const auto &t : oracle::valid_tuples(twist_braid(twist_spec(5)), k))
      valid.insert(oracle::diagram_labels(t));
    CHECK(valid == oracle::system_solutions([](const auto &a) { return oracle::odd_positive_system(a, 2); }, 4, k));
  }
}

TEST_CASE("relation system of the even positive family, m=4") {
  const BraidWord w = twist_braid(twist_spec(4));
  for (int k = 1; k <= 4; ++k) {
    INFO("k=", k);
    std::set<std::vector<Permutation>> valid;
    for (const auto &t : oracle::valid_tuples(w, k))
      valid.insert(oracle::diagram_labels(t));
    const auto fixed = oracle::system_solutions([](const auto &a) { return oracle::even_positive_system(a, 2, true); }, 4, k);
    const auto printed = oracle::system_solutions([](const auto &a) { return oracle::even_positive_system(a, 2); }, 4, k);
    CHECK(valid == fixed);
    // As written, the closing relation conjugates the wrong way: it admits
    // only a subset of the colorings from k = 4 on.
    CHECK(std::includes(valid.begin(), valid.end(), printed.begin(), printed.end()));
    if (k == 4) {
      CHECK(valid.size() == 30);
      CHECK(printed.size() == 6);
    }
  }
}

TEST_CASE("check_condition") {
  const auto t = cyc("(1 2)", 2);
  CHECK(check_condition({2, {t, t, t}}, {1, 1}) == 0);
  const auto id = Permutation(1);
  CHECK_FALSE(check_condition({1, {id, id, id}}, {1, 1}).has_value());
  CHECK_THROWS_AS(check_condition({2, {t, t}}, {1, 1}), InvalidInput);
}

TEST_CASE("every nontrivial cover satisfies its sheet condition") {
  for (int m : {2, 4, 3, 5, -3, -5}) {
    const BraidWord w = twist_braid(twist_spec(m));
    for (int k = 2; k <= 5; ++k)
      for (const auto &c : enumerate_covers(w, k)) {
        INFO("m=", m, " k=", k);
        CHECK(check_condition(c, condition_for(m)).has_value());
      }
  }
}

TEST_CASE("lifted_page_invariants") {
  CHECK(lifted_page_invariants({1, {Permutation(1), Permutation(1)}}) == PageInvariants{1, 1, 0});
  CHECK(lifted_page_invariants(example_cover()) == PageInvariants{-2, 4, 0});
  CHECK(lifted_page_invariants({2, {cyc("(1 2)", 2)}}) == PageInvariants{1, 1, 0});
  for (int m : {2, 3, 4, -3, -4, -5})
    for (int k = 2; k <= 4; ++k)
      for (const auto &c : enumerate_covers(twist_braid(twist_spec(m)), k)) {
        const auto inv = lifted_page_invariants(SurfaceCover::from_coloring(c));
        CHECK(inv.genus >= 0);
        CHECK(inv.euler == 2 - 2 * inv.genus - inv.boundary);
      }
}

TEST_CASE("covering properties") {
  for (const char *name : {"propagate-conjugacy", "page-invariants"}) {
    const PropertyResult r = run_property(name, oracle::seed(), 300);
    INFO(name, ": ", r.first_failure);
    CHECK(r.ok());
  }
}
