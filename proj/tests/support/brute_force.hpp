#pragma once

// Slow, definitional reference implementations used as test oracles.
// Nothing here calls into the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace brute {

using Perm = std::vector<int>; // 0-based images, (a*b)[i] = b[a[i]]

inline Perm identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm compose(const Perm &a, const Perm &b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = b[a[i]];
  return r;
}

inline Perm inverse(const Perm &a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[a[i]] = static_cast<int>(i);
  return r;
}

inline int crossings(const Perm &a) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      c += a[i] > a[j];
  return c;
}

/// Permutation of a positive word (letters 1..n-1), swapping adjacent
/// positions letter by letter.
inline Perm of_word(int n, const std::vector<int> &word) {
  Perm pos = identity(n); // pos[strand] = current position
  for (int g : word)
    for (auto &p : pos)
      if (p == g - 1)
        p = g;
      else if (p == g)
        p = g - 1;
  return pos;
}

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity(n);
  do
    out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// a * b is a positive permutation braid iff crossing counts add up.
inline bool product_simple(const Perm &a, const Perm &b) {
  return crossings(compose(a, b)) == crossings(a) + crossings(b);
}

/// t is a left divisor of s: s = t u with u simple and lengths adding.
inline bool prefix(const Perm &t, const Perm &s) {
  const Perm u = compose(inverse(t), s);
  return crossings(t) + crossings(u) == crossings(s);
}

inline std::vector<Perm> divisors(const Perm &s) {
  std::vector<Perm> out;
  for (const auto &t : all_perms(static_cast<int>(s.size())))
    if (prefix(t, s))
      out.push_back(t);
  return out;
}

/// Longest common divisor by enumeration.
inline Perm meet(const Perm &a, const Perm &b) {
  Perm best = identity(static_cast<int>(a.size()));
  for (const auto &t : divisors(a))
    if (prefix(t, b) && crossings(t) > crossings(best))
      best = t;
  return best;
}

/// For every nontrivial prefix t of b, a t is not simple.
inline bool left_weighted(const Perm &a, const Perm &b) {
  for (const auto &t : divisors(b))
    if (crossings(t) > 0 && product_simple(a, t))
      return false;
  return true;
}

/// Burau representation evaluated at a fixed t modulo a prime.  A
/// homomorphism, so words of the same braid get the same matrix; used to
/// check that rewritten words still name the original element.
class Burau {
public:
  static constexpr std::uint64_t P = (1ULL << 61) - 1;

  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(r & P) + static_cast<std::uint64_t>(r >> 61);
    return lo >= P ? lo - P : lo;
  }
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t s = a + b;
    return s >= P ? s - P : s;
  }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + P - b; }
  static std::uint64_t pw(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1)
        r = mul(r, a);
    return r;
  }

  using Matrix = std::vector<std::uint64_t>;

  explicit Burau(int n, std::uint64_t t = 1234567891011ULL) : n_(n), t_(t), ti_(pw(t, P - 2)) {}

  Matrix eval(const std::vector<int> &word) const {
    Matrix m(n_ * n_, 0);
    for (int i = 0; i < n_; ++i)
      m[i * n_ + i] = 1;
    for (int g : word)
      right_multiply(m, g);
    return m;
  }

  /// Delta^p x_1 ... x_r with factors given as 0-based permutations.
  Matrix eval_form(long p, const std::vector<Perm> &factors) const {
    std::vector<int> w;
    const std::vector<int> d = positive_word(identity_reversed());
    for (long k = 0; k < (p < 0 ? -p : p); ++k)
      for (int g : d)
        w.push_back(p < 0 ? -g : g);
    if (p < 0)
      std::reverse(w.begin(), w.end());
    for (const auto &f : factors)
      for (int g : positive_word(f))
        w.push_back(g);
    return eval(w);
  }

  /// Bubble-sort word for a permutation braid: swaps of adjacent positions
  /// whose strands end up inverted.
  std::vector<int> positive_word(const Perm &s) const {
    std::vector<int> order(n_); // order[pos] = target of strand at pos
    for (int i = 0; i < n_; ++i)
      order[i] = s[i];
    std::vector<int> w;
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i + 1 < n_; ++i)
        if (order[i] > order[i + 1]) {
          std::swap(order[i], order[i + 1]);
          w.push_back(i + 1);
          changed = true;
        }
    }
    return w;
  }

private:
  Perm identity_reversed() const {
    Perm d(n_);
    for (int i = 0; i < n_; ++i)
      d[i] = n_ - 1 - i;
    return d;
  }

  // Column operation for sigma_i^{+-1} on rows (m := m * B).
  void right_multiply(Matrix &m, int g) const {
    const int i = (g > 0 ? g : -g) - 1;
    // sigma: [[1-t, t], [1, 0]]; sigma^{-1}: [[0, 1], [1/t, 1 - 1/t]]
    std::uint64_t a, b, c, d;
    if (g > 0) {
      a = sub(1, t_), b = t_, c = 1, d = 0;
    } else {
      a = 0, b = 1, c = ti_, d = sub(1, ti_);
    }
    for (int r = 0; r < n_; ++r) {
      const std::uint64_t x = m[r * n_ + i], y = m[r * n_ + i + 1];
      m[r * n_ + i] = add(mul(x, a), mul(y, c));
      m[r * n_ + i + 1] = add(mul(x, b), mul(y, d));
    }
  }

  int n_;
  std::uint64_t t_, ti_;
};

inline std::vector<int> random_word(int n, std::size_t len, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> g(1, n - 1);
  std::bernoulli_distribution neg(0.5);
  std::vector<int> w(len);
  for (auto &x : w)
    x = neg(rng) ? -g(rng) : g(rng);
  return w;
}

} // namespace brute
