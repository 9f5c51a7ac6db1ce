#pragma once

#include <vector>

#include "veerkit/braid.hpp"

namespace veerkit {

/// conjugator * sigma_generator * conjugator^-1, with a positive generator.
struct QuasipositiveFactor {
  BraidWord conjugator;
  int generator = 1;
};

struct QuasipositiveFactorization {
  std::vector<QuasipositiveFactor> factors;

  void append_generator(int generator);
  // Bracket notation [x]^y for a positive word x: y^-1 x y, split into one
  // factor per letter of x, each conjugated by y^-1.
  void append_bracket(const BraidWord &positive_word, const BraidWord &exponent);
};

BraidWord expand_factorization(const QuasipositiveFactorization &f, int strands);

bool verify_quasipositive(const BraidWord &w, const QuasipositiveFactorization &f);

} // namespace veerkit
