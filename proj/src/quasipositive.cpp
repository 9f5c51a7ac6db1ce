#include "veerkit/quasipositive.hpp"

#include "veerkit/error.hpp"
#include "veerkit/word_problem.hpp"

namespace veerkit {

void QuasipositiveFactorization::append_generator(int generator) {
  factors.push_back({BraidWord(generator + 1, std::vector<BraidLetter>{}), generator});
}

void QuasipositiveFactorization::append_bracket(const BraidWord &positive_word, const BraidWord &exponent) {
  const BraidWord conj = exponent.inverse();
  for (const auto &l : positive_word.letters()) {
    if (l.sign != 1)
      throw InvalidInput("bracket base word must be positive");
    factors.push_back({conj, l.index});
  }
}

BraidWord expand_factorization(const QuasipositiveFactorization &f, int strands) {
  std::vector<BraidLetter> out;
  for (const auto &factor : f.factors) {
    if (factor.generator < 1 || factor.generator > strands - 1)
      throw InvalidInput("factor generator sigma_" + std::to_string(factor.generator) + " does not fit on " +
                         std::to_string(strands) + " strands");
    for (const auto &l : factor.conjugator.letters()) {
      if (l.index > strands - 1)
        throw InvalidInput("conjugator letter sigma_" + std::to_string(l.index) + " does not fit on " +
                           std::to_string(strands) + " strands");
      out.push_back(l);
    }
    out.push_back({factor.generator, 1});
    const auto &cl = factor.conjugator.letters();
    for (auto it = cl.rbegin(); it != cl.rend(); ++it)
      out.push_back(it->inverse());
  }
  return BraidWord(strands, std::move(out));
}

bool verify_quasipositive(const BraidWord &w, const QuasipositiveFactorization &f) {
  return braid_equal(w, expand_factorization(f, w.strands()));
}

} // namespace veerkit
