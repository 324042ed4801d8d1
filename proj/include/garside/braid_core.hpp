#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace garside {

/// Largest braid index supported by the fixed-capacity permutation storage.
inline constexpr int kMaxStrands = 32;

class InvalidStrandCount : public std::invalid_argument {
public:
  explicit InvalidStrandCount(int n);
};

class InvalidGenerator : public std::invalid_argument {
public:
  InvalidGenerator(int letter, int n);
};

class StrandMismatch : public std::invalid_argument {
public:
  StrandMismatch(int lhs, int rhs);
};

void check_strands(int n);

class SimpleElement;

/// A bijection of {1..n}.  Stored 0-based; `images()` reports 1-based
/// one-line notation.  Products read left to right, as braid words do:
/// (a * b)(i) = b(a(i)).
class Permutation {
public:
  explicit Permutation(int n);
  explicit Permutation(const std::vector<int> &images);

  int strands() const { return n_; }
  int operator[](int i) const { return img_[i]; }
  std::vector<int> images() const;

  Permutation inverse() const;
  Permutation operator*(const Permutation &rhs) const;

  /// Number of pairs i < j with p(i) > p(j).
  int inversions() const;
  bool is_identity() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  friend class SimpleElement;
  friend SimpleElement meet(const SimpleElement &, const SimpleElement &);
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxStrands> img_{};
};

/// Positive permutation braid.  Strands starting at positions i < j cross
/// (once) exactly when perm(i) > perm(j).
class SimpleElement {
public:
  explicit SimpleElement(Permutation perm) : perm_(perm) {}

  static SimpleElement identity(int n);
  static SimpleElement delta(int n);
  /// Artin generator sigma_i, 1 <= i <= n-1.
  static SimpleElement generator(int n, int i);

  int strands() const { return perm_.strands(); }
  const Permutation &permutation() const { return perm_; }

  /// Number of crossings, i.e. Artin length.
  int length() const { return perm_.inversions(); }
  bool is_trivial() const { return perm_.is_identity(); }
  bool is_delta() const;

  /// Bit i-1 set iff sigma_i is a prefix.
  std::uint32_t starting_set() const;
  /// Bit i-1 set iff sigma_i is a suffix.
  std::uint32_t finishing_set() const;

  /// The simple c with s * c = Delta.
  SimpleElement right_complement() const;
  /// The simple c with c * s = Delta.
  SimpleElement left_complement() const;

  /// Positive Artin word (letters 1..n-1) representing this element.
  std::vector<int> to_word() const;

  friend bool operator==(const SimpleElement &, const SimpleElement &) = default;
  friend auto operator<=>(const SimpleElement &, const SimpleElement &) = default;

private:
  Permutation perm_;
};

/// A word in the Artin generators; letter g means sigma_|g|^sign(g).
struct BraidWord {
  int n = 2;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int strands, std::vector<int> word);

  BraidWord inverse() const;
  friend BraidWord operator*(const BraidWord &a, const BraidWord &b);
  friend bool operator==(const BraidWord &, const BraidWord &) = default;
};

SimpleElement delta(int n);

/// tau^k: conjugation by Delta^k.  tau is an involution, so only the parity
/// of k matters.
SimpleElement tau(const SimpleElement &s, long k = 1);

/// True iff a * b is again simple (no pair of strands crosses twice).
bool product_is_simple(const SimpleElement &a, const SimpleElement &b);

/// The permutation product, only meaningful as a braid when
/// product_is_simple(a, b).
SimpleElement unchecked_product(const SimpleElement &a, const SimpleElement &b);

/// a is a left divisor (prefix) of b.
bool is_prefix(const SimpleElement &a, const SimpleElement &b);

/// Greatest common prefix.
SimpleElement meet(const SimpleElement &a, const SimpleElement &b);

bool is_left_weighted(const SimpleElement &a, const SimpleElement &b);

/// Rebalance (a, b) into a left-weighted pair with the same product.
std::pair<SimpleElement, SimpleElement>
compose_simple_pair(const SimpleElement &a, const SimpleElement &b);

std::size_t hash_value(const SimpleElement &s);

} // namespace garside

template <> struct std::hash<garside::SimpleElement> {
  std::size_t operator()(const garside::SimpleElement &s) const {
    return garside::hash_value(s);
  }
};
