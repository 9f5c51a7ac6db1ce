#include "veerkit/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "veerkit/error.hpp"

namespace veerkit {

BraidLetter BraidLetter::from_signed(int generator) {
  if (generator == 0)
    throw InvalidInput("braid generator 0 does not exist");
  return {std::abs(generator), generator > 0 ? 1 : -1};
}

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1)
    throw InvalidInput("a braid needs at least one strand");
  for (const auto &l : letters_) {
    if (l.index < 1 || l.index > strands_ - 1)
      throw InvalidInput("generator sigma_" + std::to_string(l.index) + " does not exist on " +
                         std::to_string(strands_) + " strands");
    if (l.sign != 1 && l.sign != -1)
      throw InvalidInput("letter sign must be +1 or -1");
  }
}

BraidWord::BraidWord(int strands, std::initializer_list<int> generators)
    : BraidWord(from_signed(strands, std::span<const int>(generators.begin(), generators.size()))) {}

BraidWord BraidWord::from_signed(int strands, std::span<const int> generators) {
  std::vector<BraidLetter> letters;
  letters.reserve(generators.size());
  for (int g : generators)
    letters.push_back(BraidLetter::from_signed(g));
  return BraidWord(strands, std::move(letters));
}

std::vector<int> BraidWord::signed_letters() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto &l : letters_)
    out.push_back(l.signed_value());
  return out;
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(it->inverse());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::concat(const BraidWord &rhs) const {
  if (rhs.strands_ != strands_)
    throw InvalidInput("cannot concatenate braids on " + std::to_string(strands_) + " and " +
                       std::to_string(rhs.strands_) + " strands");
  std::vector<BraidLetter> out(letters_);
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::with_strands(int strands) const { return BraidWord(strands, letters_); }

std::string BraidWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i)
    os << (i ? " " : "") << letters_[i].signed_value();
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const BraidWord &w) { return os << w.to_string(); }

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  std::vector<int> gens;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j]))
      ++j;
    std::string_view token = text.substr(i, j - i);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+')
      digits.remove_prefix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || end != digits.data() + digits.size())
      throw InvalidInput("braid token '" + std::string(token) + "' is not an integer");
    if (value == 0)
      throw InvalidInput("braid token 0 is not a generator");
    gens.push_back(value);
    i = j;
  }
  int needed = 1;
  for (int g : gens)
    needed = std::max(needed, std::abs(g) + 1);
  int b = strands.value_or(needed);
  if (b < needed)
    throw InvalidInput("generator index " + std::to_string(needed - 1) + " needs at least " + std::to_string(needed) +
                       " strands, got " + std::to_string(b));
  return BraidWord::from_signed(b, gens);
}

Permutation underlying_permutation(const BraidWord &w) {
  // occupant[p] = starting position of the strand currently at position p.
  std::vector<int> occupant(static_cast<std::size_t>(w.strands()));
  for (std::size_t p = 0; p < occupant.size(); ++p)
    occupant[p] = static_cast<int>(p);
  for (const auto &l : w.letters())
    std::swap(occupant[static_cast<std::size_t>(l.index - 1)], occupant[static_cast<std::size_t>(l.index)]);
  std::vector<int> images(occupant.size());
  for (std::size_t p = 0; p < occupant.size(); ++p)
    images[static_cast<std::size_t>(occupant[p])] = static_cast<int>(p);
  return Permutation::from_images(std::move(images));
}

int closure_component_count(const BraidWord &w) { return static_cast<int>(underlying_permutation(w).cycle_count()); }

int self_linking(const BraidWord &w) {
  int components = closure_component_count(w);
  if (components != 1)
    throw InvalidInput("self-linking is defined here for knots; closure has " + std::to_string(components) +
                       " components");
  int writhe = 0;
  for (const auto &l : w.letters())
    writhe += l.sign;
  return writhe - w.strands();
}

BraidWord markov_stabilize(const BraidWord &w, int sign) {
  if (sign != 1 && sign != -1)
    throw InvalidInput("stabilization sign must be +1 or -1");
  std::vector<BraidLetter> letters(w.letters());
  letters.push_back({w.strands(), sign});
  return BraidWord(w.strands() + 1, std::move(letters));
}

} // namespace veerkit
