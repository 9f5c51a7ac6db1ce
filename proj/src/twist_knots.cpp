#include "veerkit/twist_knots.hpp"

#include "veerkit/error.hpp"

namespace veerkit {

namespace {

// Inclusive index ranges; a range running the wrong way is empty.
void up(std::vector<int> &w, int from, int to, int sign = 1) {
  for (int i = from; i <= to; ++i)
    w.push_back(sign * i);
}
void down(std::vector<int> &w, int from, int to, int sign = 1) {
  for (int i = from; i >= to; --i)
    w.push_back(sign * i);
}

struct EvenNegativeParams {
  int a; // zPlus
  int b; // sPlus
};

EvenNegativeParams even_negative_params(const TwistKnotSpec &spec) {
  const int n = -spec.m / 2;
  return {spec.rep - 1, n - spec.rep};
}

void push_cuts(BranchingWord &w, std::initializer_list<int> cuts, int sign) {
  for (int c : cuts)
    w.letters.push_back({c, sign});
}

} // namespace

std::string family_name(TwistFamily f) {
  switch (f) {
  case TwistFamily::EvenPositive:
    return "EvenPositive";
  case TwistFamily::OddNegative:
    return "OddNegative";
  case TwistFamily::OddPositive:
    return "OddPositive";
  case TwistFamily::EvenNegative:
    return "EvenNegative";
  }
  return "?";
}

TwistKnotSpec twist_spec(int m, int rep) {
  TwistKnotSpec s{m, TwistFamily::EvenPositive, 1};
  if (m >= 2 && m % 2 == 0)
    s.family = TwistFamily::EvenPositive;
  else if (m <= -3 && m % 2 != 0)
    s.family = TwistFamily::OddNegative;
  else if (m >= 3 && m % 2 != 0)
    s.family = TwistFamily::OddPositive;
  else if (m <= -4 && m % 2 == 0)
    s.family = TwistFamily::EvenNegative;
  else
    throw InvalidInput("no braid representative for m = " + std::to_string(m) + " (need m >= 2 or m <= -3)");

  if (s.family == TwistFamily::EvenNegative) {
    const int n = -m / 2;
    const int reps = (n + 1) / 2;
    if (rep < 1 || rep > reps)
      throw InvalidInput("representative index " + std::to_string(rep) + " out of range 1.." +
                         std::to_string(reps) + " for m = " + std::to_string(m));
    s.rep = rep;
  } else if (rep != 1) {
    throw InvalidInput("m = " + std::to_string(m) + " has a single representative");
  }
  return s;
}

int family_n(const TwistKnotSpec &spec) {
  switch (spec.family) {
  case TwistFamily::EvenPositive:
    return spec.m / 2;
  case TwistFamily::OddNegative:
    return (-spec.m - 1) / 2;
  case TwistFamily::OddPositive:
    return (spec.m - 1) / 2;
  case TwistFamily::EvenNegative:
    return -spec.m / 2;
  }
  return 0;
}

BraidWord twist_braid(const TwistKnotSpec &spec) {
  std::vector<int> w;
  int strands = 0;
  const int n = family_n(spec);
  switch (spec.family) {
  case TwistFamily::EvenPositive:
    w.push_back(n + 1);
    down(w, n, 2, -1);
    w.insert(w.end(), {-1, -1});
    up(w, 2, n + 1, -1);
    up(w, 1, n + 1);
    strands = n + 2;
    break;
  case TwistFamily::OddNegative:
    w.push_back(-(n + 1));
    down(w, n, 2);
    w.push_back(1);
    up(w, 2, n + 1, -1);
    up(w, 1, n);
    strands = n + 2;
    break;
  case TwistFamily::OddPositive:
    down(w, n + 1, 2, -1);
    w.insert(w.end(), {-1, -1});
    up(w, 2, n + 1, -1);
    up(w, 1, n);
    w.push_back(-(n + 1));
    strands = n + 2;
    break;
  case TwistFamily::EvenNegative: {
    const auto [a, b] = even_negative_params(spec);
    if (a == 0) {
      w.push_back(b + 1);
      down(w, b, 1, -1);
      down(w, b + 1, 1);
      up(w, 1, b + 1);
      strands = b + 2;
    } else {
      w.push_back(a + b + 1);
      down(w, a + b, a + 1, -1);
      down(w, a, 1);
      up(w, 1, a);
      down(w, a + b + 1, a + 1);
      up(w, 1, a, -1);
      up(w, a + 1, a + b + 1);
      strands = a + b + 2;
    }
    break;
  }
  }
  return BraidWord::from_signed(strands, w);
}

std::set<int> expected_max_sl(int m) {
  if (m % 2 != 0) {
    if (m > -1)
      return {-m - 4};
    if (m == -1)
      return {-1};
    return {-3};
  }
  if (m >= -2)
    return {-m - 1};
  return {1};
}

std::vector<RepresentativeCode> representative_table(int m) {
  if (m > -4 || m % 2 != 0)
    throw InvalidInput("representative table needs even m <= -4, got " + std::to_string(m));
  const int n = -m / 2;
  std::vector<RepresentativeCode> out;
  for (int l = 1; l <= (n + 1) / 2; ++l)
    out.push_back({l - 1, n - l, l - 1, n - l});
  return out;
}

BranchingWordTemplate expected_branching_word(const TwistKnotSpec &spec) {
  const int n = family_n(spec);
  BranchingWord omega;
  BranchingWordTemplate t;
  auto &w = t.word;
  switch (spec.family) {
  case TwistFamily::EvenPositive:
    // A_{n+1}^-1 Om A_{n+2}^-1 Om^-1 A_{n+1} A_1, Om = A_1 ... A_{n+1}
    for (int i = 1; i <= n + 1; ++i)
      omega.letters.push_back({i, 1});
    push_cuts(w, {n + 1}, -1);
    w = w.concat(omega);
    push_cuts(w, {n + 2}, -1);
    w = w.concat(omega.inverse());
    push_cuts(w, {n + 1, 1}, 1);
    t.designated_cut = 1;
    break;
  case TwistFamily::OddNegative:
    // A_n^-1 Om A_{n+1}^-1 Om^-1 A_n A_{n+2}, Om = A_{n+2} A_1 ... A_n
    omega.letters.push_back({n + 2, 1});
    for (int i = 1; i <= n; ++i)
      omega.letters.push_back({i, 1});
    push_cuts(w, {n}, -1);
    w = w.concat(omega);
    push_cuts(w, {n + 1}, -1);
    w = w.concat(omega.inverse());
    push_cuts(w, {n, n + 2}, 1);
    t.designated_cut = n + 2;
    break;
  case TwistFamily::OddPositive:
    // A_{n+1}^-1 Om^-1 A_{n+1}^-1 Om A_{n+1} A_{n+2}, Om = A_{n+2} A_1 ... A_n
    omega.letters.push_back({n + 2, 1});
    for (int i = 1; i <= n; ++i)
      omega.letters.push_back({i, 1});
    push_cuts(w, {n + 1}, -1);
    w = w.concat(omega.inverse());
    push_cuts(w, {n + 1}, -1);
    w = w.concat(omega);
    push_cuts(w, {n + 1, n + 2}, 1);
    t.designated_cut = n + 2;
    break;
  case TwistFamily::EvenNegative:
    throw InvalidInput("no closed-form branching word for the EvenNegative family");
  }
  return t;
}

bool is_universal_range(int m) { return m >= 2 || m <= -3; }

QuasipositiveFactorization twist_factorization(const TwistKnotSpec &spec) {
  if (spec.family != TwistFamily::EvenNegative)
    throw InvalidInput("quasipositive factorization is only provided for m <= -4 even");
  const auto [a, b] = even_negative_params(spec);
  std::vector<int> x, y;
  int outer = 0;
  if (a == 0) {
    down(x, b + 1, 1);
    up(y, 1, b);
    outer = b + 1;
  } else if (a == 1) {
    x.push_back(1);
    down(x, b + 2, 2);
    y.push_back(-1);
    up(y, 2, b + 1);
    outer = b + 2;
  } else {
    up(x, 1, a);
    down(x, a + b + 1, a + 1);
    up(y, 1, a, -1);
    up(y, a + 1, a + b);
    outer = a + b + 1;
  }
  const int strands = a + b + 2;
  QuasipositiveFactorization f;
  f.append_generator(outer);
  f.append_bracket(BraidWord::from_signed(strands, x), BraidWord::from_signed(strands, y));
  f.append_generator(outer);
  return f;
}

} // namespace veerkit
