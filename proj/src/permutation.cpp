#include "veerkit/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "veerkit/error.hpp"

namespace veerkit {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<char> hit(images.size(), 0);
  for (int x : images) {
    if (x < 0 || static_cast<std::size_t>(x) >= images.size() || hit[static_cast<std::size_t>(x)])
      throw InvalidInput("image list is not a bijection");
    hit[static_cast<std::size_t>(x)] = 1;
  }
  return Permutation(std::move(images), 0);
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> zero(images.begin(), images.end());
  for (int &x : zero)
    --x;
  return from_images(std::move(zero));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<int>> &one_based_cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);
  for (const auto &cyc : one_based_cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i] - 1;
      int to = cyc[(i + 1) % cyc.size()] - 1;
      if (from < 0 || static_cast<std::size_t>(from) >= degree)
        throw InvalidInput("cycle entry " + std::to_string(cyc[i]) + " outside 1.." + std::to_string(degree));
      if (used[static_cast<std::size_t>(from)])
        throw InvalidInput("cycles are not disjoint");
      used[static_cast<std::size_t>(from)] = 1;
      img[static_cast<std::size_t>(from)] = to;
    }
  }
  return Permutation(std::move(img), 0);
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> *current = nullptr;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '(') {
      if (current)
        throw InvalidInput("nested '(' in cycle notation");
      cycles.emplace_back();
      current = &cycles.back();
      ++i;
    } else if (c == ')') {
      if (!current)
        throw InvalidInput("unbalanced ')' in cycle notation");
      current = nullptr;
      ++i;
    } else if (c == ' ' || c == ',' || c == '\t') {
      ++i;
    } else if (c >= '0' && c <= '9') {
      if (!current)
        throw InvalidInput("point outside parentheses in cycle notation");
      int v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9')
        v = v * 10 + (text[i++] - '0');
      current->push_back(v);
    } else {
      throw InvalidInput(std::string("unexpected character '") + c + "' in cycle notation");
    }
  }
  if (current)
    throw InvalidInput("unterminated cycle");
  return from_cycles(degree, cycles);
}

Permutation Permutation::transposition(std::size_t degree, int a, int b) {
  Permutation p(degree);
  std::swap(p.images_.at(static_cast<std::size_t>(a)), p.images_.at(static_cast<std::size_t>(b)));
  return p;
}

Permutation Permutation::cycle(std::size_t degree) {
  std::vector<int> img(degree);
  for (std::size_t i = 0; i < degree; ++i)
    img[i] = static_cast<int>((i + 1) % degree);
  return Permutation(std::move(img), 0);
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(images_);
  for (int &x : out)
    ++x;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv), 0);
}

Permutation operator*(const Permutation &lhs, const Permutation &rhs) {
  if (lhs.degree() != rhs.degree())
    throw InvalidInput("permutation degree mismatch");
  std::vector<int> out(rhs.degree());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = lhs.images_[static_cast<std::size_t>(rhs.images_[i])];
  return Permutation(std::move(out), 0);
}

Permutation Permutation::then(const Permutation &next) const { return next * *this; }

Permutation Permutation::conjugated_by(const Permutation &g) const { return g * *this * g.inverse(); }

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i))
      return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s])
      continue;
    auto &cyc = out.emplace_back();
    for (int x = static_cast<int>(s); !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      cyc.push_back(x);
    }
  }
  return out;
}

std::size_t Permutation::cycle_count() const {
  std::size_t count = 0;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s])
      continue;
    ++count;
    for (int x = static_cast<int>(s); !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)])
      seen[static_cast<std::size_t>(x)] = 1;
  }
  return count;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> type;
  for (const auto &c : cycles())
    type.push_back(static_cast<int>(c.size()));
  std::sort(type.rbegin(), type.rend());
  return type;
}

int Permutation::orbit_length(int point) const {
  int len = 1;
  for (int x = (*this)(point); x != point; x = (*this)(x))
    ++len;
  return len;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto &c : cycles()) {
    if (c.size() < 2)
      continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? " " : "") << c[i] + 1;
    os << ')';
  }
  if (!any)
    os << "()";
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const Permutation &p) { return os << p.to_string(); }

bool generates_transitive(std::span<const Permutation> gens, std::size_t degree) {
  if (degree == 0)
    return true;
  std::vector<char> seen(degree, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto &g : gens) {
      // Orbits of a finite group are closed under the forward images alone.
      int y = g(x);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == degree;
}

std::vector<Permutation> symmetric_group(std::size_t degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation class_representative(std::span<const int> cycle_type) {
  std::size_t degree = 0;
  for (int len : cycle_type)
    degree += static_cast<std::size_t>(len);
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len : cycle_type) {
    auto &c = cycles.emplace_back();
    for (int i = 0; i < len; ++i)
      c.push_back(next++);
  }
  return Permutation::from_cycles(degree, cycles);
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int> &prefix, std::vector<std::vector<int>> &out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<std::vector<int>> partitions(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  partitions_into(k, k, prefix, out);
  return out;
}

} // namespace veerkit

std::size_t std::hash<veerkit::Permutation>::operator()(const veerkit::Permutation &p) const noexcept {
  std::size_t h = p.degree();
  for (int x : p.images())
    h = h * 31u + static_cast<std::size_t>(x);
  return h;
}
