#include "veerkit/branching.hpp"

#include <cctype>
#include <sstream>

#include "veerkit/error.hpp"

namespace veerkit {

BranchingWord BranchingWord::inverse() const {
  BranchingWord out;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.letters.push_back(it->inverse());
  return out;
}

BranchingWord BranchingWord::concat(const BranchingWord &rhs) const {
  BranchingWord out{letters};
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

BranchingWord BranchingWord::freely_reduced() const {
  BranchingWord out;
  for (const auto &l : letters) {
    if (!out.letters.empty() && out.letters.back() == l.inverse())
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

bool BranchingWord::is_freely_reduced() const {
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (letters[i] == letters[i - 1].inverse())
      return false;
  return true;
}

bool DetailedBranchingWord::is_chained() const {
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (letters[i].from != letters[i - 1].to)
      return false;
  return true;
}

BranchingWord DetailedBranchingWord::undecorated() const {
  BranchingWord out;
  out.letters.reserve(letters.size());
  for (const auto &l : letters)
    out.letters.push_back(l.undecorated());
  return out;
}

std::string to_string(const BranchingWord &w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    os << (i ? " " : "") << 'A' << w.letters[i].cut;
    if (w.letters[i].sign < 0)
      os << '\'';
  }
  return os.str();
}

std::string to_string(const DetailedBranchingWord &w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const auto &l = w.letters[i];
    os << (i ? " " : "") << 'A' << l.cut << '{' << l.from + 1 << "->" << l.to + 1 << '}';
    if (l.sign < 0)
      os << '\'';
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const BranchingWord &w) { return os << to_string(w); }
std::ostream &operator<<(std::ostream &os, const DetailedBranchingWord &w) { return os << to_string(w); }

namespace {

class Scanner {
public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ','))
      ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(std::string_view s) {
    if (text_.substr(pos_, s.size()) != s)
      fail("expected '" + std::string(s) + "'");
    pos_ += s.size();
  }
  int number() {
    std::size_t start = pos_;
    int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      v = v * 10 + (text_[pos_++] - '0');
    if (pos_ == start)
      fail("expected a number");
    return v;
  }
  int sign() {
    int s = 1;
    // Accept A1' as well as A1^-1.
    if (accept('\''))
      s = -1;
    else if (text_.substr(pos_, 3) == "^-1") {
      pos_ += 3;
      s = -1;
    }
    return s;
  }
  [[noreturn]] void fail(const std::string &what) const {
    throw InvalidInput("branching word parse error at offset " + std::to_string(pos_) + ": " + what);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

BranchingWord parse_branching_word(std::string_view text) {
  Scanner sc(text);
  BranchingWord w;
  while (!sc.done()) {
    sc.expect("A");
    int cut = sc.number();
    if (cut < 1)
      sc.fail("cut index must be >= 1");
    w.letters.push_back({cut, sc.sign()});
  }
  return w;
}

DetailedBranchingWord parse_detailed_word(std::string_view text) {
  Scanner sc(text);
  DetailedBranchingWord w;
  while (!sc.done()) {
    sc.expect("A");
    int cut = sc.number();
    if (cut < 1)
      sc.fail("cut index must be >= 1");
    sc.expect("{");
    int from = sc.number();
    sc.expect("->");
    int to = sc.number();
    sc.expect("}");
    if (from < 1 || to < 1)
      sc.fail("sheets are numbered from 1");
    w.letters.push_back({cut, sc.sign(), from - 1, to - 1});
  }
  return w;
}

} // namespace veerkit
