#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "veerkit/braid.hpp"
#include "veerkit/branching.hpp"
#include "veerkit/quasipositive.hpp"

namespace veerkit {

// EvenPositive: m >= 2 even. OddNegative: m <= -3 odd. OddPositive: m >= 3
// odd. EvenNegative: m <= -4 even, several transverse representatives.
enum class TwistFamily { EvenPositive, OddNegative, OddPositive, EvenNegative };

std::string family_name(TwistFamily f);

struct TwistKnotSpec {
  int m = 2;
  TwistFamily family = TwistFamily::EvenPositive;
  int rep = 1; // representative index l, only meaningful for EvenNegative
};

/// Classifies m and validates rep. Rejects m in {0, 1, -1, -2} and reps
/// outside 1..ceil(n/2) for m = -2n.
TwistKnotSpec twist_spec(int m, int rep = 1);

/// The family's parameter: n with strands n+2 for the first three families,
/// n = -m/2 for EvenNegative.
int family_n(const TwistKnotSpec &spec);

/// Maximal-sl transverse braid representative.
BraidWord twist_braid(const TwistKnotSpec &spec);

/// Singleton set holding the maximal self-linking number of K_m.
std::set<int> expected_max_sl(int m);

/// Crossing counts of a front codification for m = -2n: zPlus + sPlus =
/// zMinus + sMinus = n - 1.
struct RepresentativeCode {
  int zPlus = 0;
  int sPlus = 0;
  int zMinus = 0;
  int sMinus = 0;
  friend bool operator==(const RepresentativeCode &, const RepresentativeCode &) = default;
};

std::vector<RepresentativeCode> representative_table(int m);

struct BranchingWordTemplate {
  BranchingWord word;
  int designated_cut = 1;
};

/// Closed-form branching word W of the lifted arcs for the first three
/// families. Throws InvalidInput for EvenNegative.
BranchingWordTemplate expected_branching_word(const TwistKnotSpec &spec);

bool is_universal_range(int m);

/// Quasipositive factorization of an EvenNegative representative:
/// sigma_o [x]^y sigma_o with [x]^y = y^-1 x y.
QuasipositiveFactorization twist_factorization(const TwistKnotSpec &spec);

} // namespace veerkit
