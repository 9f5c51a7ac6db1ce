#include "veerkit/artin.hpp"

#include "veerkit/error.hpp"

namespace veerkit {

FreeAutomorphism::FreeAutomorphism(const BraidWord &w) {
  const int b = w.strands();
  images_.resize(static_cast<std::size_t>(b));
  for (int i = 1; i <= b; ++i)
    images_[static_cast<std::size_t>(i - 1)].letters.push_back({i, 1});
  // Precomposing with each letter's action, last letter first, builds
  // phi_L o ... o phi_1 without ever substituting into long words.
  const auto &letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    auto &x = images_[static_cast<std::size_t>(it->index - 1)];
    auto &y = images_[static_cast<std::size_t>(it->index)];
    if (it->sign > 0) {
      BranchingWord nx = x.concat(y).concat(x.inverse()).freely_reduced();
      y = std::move(x);
      x = std::move(nx);
    } else {
      BranchingWord ny = y.inverse().concat(x).concat(y).freely_reduced();
      x = std::move(y);
      y = std::move(ny);
    }
  }
}

BranchingWord FreeAutomorphism::apply(const BranchingWord &word) const {
  BranchingWord out;
  for (const auto &l : word.letters) {
    if (l.cut < 1 || l.cut > rank())
      throw InvalidInput("free group letter A" + std::to_string(l.cut) + " out of range");
    const auto &img = image(l.cut);
    out = out.concat(l.sign > 0 ? img : img.inverse());
  }
  return out.freely_reduced();
}

BranchingWord artin_image(const BraidWord &w, int j) {
  if (j < 1 || j > w.strands())
    throw InvalidInput("cut index " + std::to_string(j) + " out of range 1.." + std::to_string(w.strands()));
  BranchingWord p;
  for (int i = 1; i < j; ++i)
    p.letters.push_back({i, 1});
  const BranchingWord aj{{{j, 1}}};
  const FreeAutomorphism phi(w);
  const BranchingWord moved = phi.apply(p.concat(aj.inverse()).concat(p.inverse()));
  return p.inverse().concat(moved).concat(p).concat(aj).freely_reduced();
}

} // namespace veerkit
