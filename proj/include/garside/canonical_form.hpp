#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "garside/braid_core.hpp"

namespace garside {

/// Left normal form Delta^p x_1 ... x_r.  Factors are never trivial nor
/// Delta, and consecutive factors are left-weighted.
class CanonicalForm {
public:
  explicit CanonicalForm(int n);

  static CanonicalForm identity(int n) { return CanonicalForm(n); }
  static CanonicalForm delta_power(int n, long p);
  static CanonicalForm from_simple(const SimpleElement &s);
  /// Builds a form from raw parts, normalizing them first.
  static CanonicalForm from_parts(int n, long p, const std::vector<SimpleElement> &factors);

  int strands() const { return n_; }
  long delta_exponent() const { return p_; }
  const std::vector<SimpleElement> &factors() const { return factors_; }

  long inf() const { return p_; }
  long sup() const { return p_ + static_cast<long>(factors_.size()); }
  long canonical_length() const { return static_cast<long>(factors_.size()); }
  bool is_delta_power() const { return factors_.empty(); }
  bool is_identity() const { return p_ == 0 && factors_.empty(); }

  /// this * s
  void append(const SimpleElement &s);
  /// s * this
  void prepend(const SimpleElement &s);
  /// this * Delta^k
  void append_delta(long k);
  /// Delta^k * this
  void prepend_delta(long k) { p_ += k; }

  /// Artin word of Delta^p x_1 ... x_r.
  BraidWord to_word() const;

  friend bool operator==(const CanonicalForm &, const CanonicalForm &) = default;

private:
  void push_back_and_sweep(const SimpleElement &s);
  void strip();

  int n_;
  long p_ = 0;
  std::vector<SimpleElement> factors_;
};

struct Lengths {
  long inf;
  long sup;
  long canonical_len;
  long braid_len;
};

/// a^{-1} b with a, b positive and no common nontrivial prefix.
struct MixedForm {
  CanonicalForm a;
  CanonicalForm b;
};

CanonicalForm normal_form(const BraidWord &w);
CanonicalForm multiply(const CanonicalForm &x, const CanonicalForm &y);
CanonicalForm invert(const CanonicalForm &x);
/// x^m by repeated right multiplication.
CanonicalForm power(const CanonicalForm &x, long m);
/// s^{-1} x s
CanonicalForm conjugate(const CanonicalForm &x, const SimpleElement &s);
/// w^{-1} x w
CanonicalForm conjugate(const CanonicalForm &x, const CanonicalForm &w);
/// Factor-wise tau^k, i.e. Delta^k x Delta^{-k}.
CanonicalForm tau(const CanonicalForm &x, long k = 1);

Lengths lengths(const CanonicalForm &x);
long braid_length(const CanonicalForm &x);
MixedForm mixed_canonical_form(const CanonicalForm &x);

std::size_t hash_value(const CanonicalForm &x);

} // namespace garside

template <> struct std::hash<garside::CanonicalForm> {
  std::size_t operator()(const garside::CanonicalForm &x) const {
    return garside::hash_value(x);
  }
};
