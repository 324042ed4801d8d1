#include "garside/braid_core.hpp"

#include <algorithm>
#include <bit>

namespace garside {

InvalidStrandCount::InvalidStrandCount(int n)
    : std::invalid_argument("invalid strand count " + std::to_string(n) +
                            " (need 2 <= n <= " + std::to_string(kMaxStrands) + ")") {}

InvalidGenerator::InvalidGenerator(int letter, int n)
    : std::invalid_argument("invalid generator " + std::to_string(letter) + " for " +
                            std::to_string(n) + " strands") {}

StrandMismatch::StrandMismatch(int lhs, int rhs)
    : std::invalid_argument("strand counts differ: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)) {}

void check_strands(int n) {
  if (n < 2 || n > kMaxStrands)
    throw InvalidStrandCount(n);
}

namespace {

void check_same(int a, int b) {
  if (a != b)
    throw StrandMismatch(a, b);
}

} // namespace

Permutation::Permutation(int n) {
  check_strands(n);
  n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i)
    img_[i] = static_cast<std::uint8_t>(i);
}

Permutation::Permutation(const std::vector<int> &images) {
  const int n = static_cast<int>(images.size());
  check_strands(n);
  n_ = static_cast<std::uint8_t>(n);
  std::uint64_t seen = 0;
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > n || (seen >> v & 1u))
      throw std::invalid_argument("not a permutation of 1..n");
    seen |= std::uint64_t{1} << v;
    img_[i] = static_cast<std::uint8_t>(v - 1);
  }
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i)
    out[i] = img_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  Permutation r = *this;
  for (int i = 0; i < n_; ++i)
    r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Permutation Permutation::operator*(const Permutation &rhs) const {
  check_same(n_, rhs.n_);
  Permutation r = *this;
  for (int i = 0; i < n_; ++i)
    r.img_[i] = rhs.img_[img_[i]];
  return r;
}

int Permutation::inversions() const {
  int count = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      count += img_[i] > img_[j];
  return count;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (img_[i] != i)
      return false;
  return true;
}

SimpleElement SimpleElement::identity(int n) { return SimpleElement(Permutation(n)); }

SimpleElement SimpleElement::delta(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i)
    p.img_[i] = static_cast<std::uint8_t>(n - 1 - i);
  return SimpleElement(p);
}

SimpleElement SimpleElement::generator(int n, int i) {
  check_strands(n);
  if (i < 1 || i >= n)
    throw InvalidGenerator(i, n);
  Permutation p(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return SimpleElement(p);
}

bool SimpleElement::is_delta() const {
  const int n = strands();
  for (int i = 0; i < n; ++i)
    if (perm_[i] != n - 1 - i)
      return false;
  return true;
}

std::uint32_t SimpleElement::starting_set() const {
  std::uint32_t s = 0;
  for (int i = 0; i + 1 < strands(); ++i)
    if (perm_[i] > perm_[i + 1])
      s |= 1u << i;
  return s;
}

std::uint32_t SimpleElement::finishing_set() const {
  const Permutation inv = perm_.inverse();
  std::uint32_t s = 0;
  for (int i = 0; i + 1 < strands(); ++i)
    if (inv[i] > inv[i + 1])
      s |= 1u << i;
  return s;
}

SimpleElement SimpleElement::right_complement() const {
  return SimpleElement(perm_.inverse() * delta(strands()).perm_);
}

SimpleElement SimpleElement::left_complement() const {
  return SimpleElement(delta(strands()).perm_ * perm_.inverse());
}

std::vector<int> SimpleElement::to_word() const {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(length()));
  SimpleElement rest = *this;
  while (std::uint32_t s = rest.starting_set()) {
    const int i = std::countr_zero(s);
    word.push_back(i + 1);
    // strip the leading sigma_{i+1}
    std::swap(rest.perm_.img_[i], rest.perm_.img_[i + 1]);
  }
  return word;
}

BraidWord::BraidWord(int strands, std::vector<int> word) : n(strands), letters(std::move(word)) {
  check_strands(n);
  for (int g : letters)
    if (g == 0 || g >= n || -g >= n)
      throw InvalidGenerator(g, n);
}

BraidWord BraidWord::inverse() const {
  BraidWord r;
  r.n = n;
  r.letters.assign(letters.rbegin(), letters.rend());
  for (int &g : r.letters)
    g = -g;
  return r;
}

BraidWord operator*(const BraidWord &a, const BraidWord &b) {
  check_same(a.n, b.n);
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

SimpleElement delta(int n) { return SimpleElement::delta(n); }

SimpleElement tau(const SimpleElement &s, long k) {
  if (k % 2 == 0)
    return s;
  const int n = s.strands();
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i)
    img[i] = n - s.permutation()[n - 1 - i];
  return SimpleElement(Permutation(img));
}

bool product_is_simple(const SimpleElement &a, const SimpleElement &b) {
  check_same(a.strands(), b.strands());
  return (a.permutation() * b.permutation()).inversions() == a.length() + b.length();
}

SimpleElement unchecked_product(const SimpleElement &a, const SimpleElement &b) {
  return SimpleElement(a.permutation() * b.permutation());
}

bool is_prefix(const SimpleElement &a, const SimpleElement &b) {
  check_same(a.strands(), b.strands());
  const Permutation rest = a.permutation().inverse() * b.permutation();
  return a.length() + rest.inversions() == b.length();
}

SimpleElement meet(const SimpleElement &a, const SimpleElement &b) {
  check_same(a.strands(), b.strands());
  // Grow the common prefix one atom at a time; the prefixes of Delta form a
  // lattice, so any atom dividing both remainders extends the meet.
  Permutation ra = a.permutation();
  Permutation rb = b.permutation();
  while (true) {
    const std::uint32_t common = SimpleElement(ra).starting_set() & SimpleElement(rb).starting_set();
    if (common == 0)
      break;
    const int i = std::countr_zero(common);
    std::swap(ra.img_[i], ra.img_[i + 1]);
    std::swap(rb.img_[i], rb.img_[i + 1]);
  }
  // a = meet * ra
  return SimpleElement(a.permutation() * ra.inverse());
}

bool is_left_weighted(const SimpleElement &a, const SimpleElement &b) {
  check_same(a.strands(), b.strands());
  return (b.starting_set() & ~a.finishing_set()) == 0;
}

std::pair<SimpleElement, SimpleElement>
compose_simple_pair(const SimpleElement &a, const SimpleElement &b) {
  const SimpleElement t = meet(a.right_complement(), b);
  if (t.is_trivial())
    return {a, b};
  return {unchecked_product(a, t),
          SimpleElement(t.permutation().inverse() * b.permutation())};
}

std::size_t hash_value(const SimpleElement &s) {
  std::size_t h = static_cast<std::size_t>(s.strands());
  for (int i = 0; i < s.strands(); ++i)
    h = h * 31 + static_cast<std::size_t>(s.permutation()[i]);
  return h;
}

} // namespace garside
