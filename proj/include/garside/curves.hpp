#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "garside/canonical_form.hpp"

namespace garside {

class NoCurves : public std::invalid_argument {
public:
  explicit NoCurves(int n);
};

/// Circle around punctures lo..hi (1-based, inclusive).
struct RoundCurve {
  int lo;
  int hi;
  friend bool operator==(const RoundCurve &, const RoundCurve &) = default;
  friend auto operator<=>(const RoundCurve &, const RoundCurve &) = default;
};

/// Isotopy class of a simple closed curve in the n-punctured disk, stored as
/// Dynnikov coordinates.
///
/// The disk is viewed inside a larger one with an extra, never-moved
/// puncture on each side, which makes the generator update rules uniform.
/// Each of the n punctures then carries a pair (a_k, b_k):
///   a_k = (crossings of the arc below puncture k - arc above) / 2
///   b_k = (crossings of the vertical line left of k - line right of k) / 2
/// The pairs at punctures 2..n-1 are the classical 2n-4 Dynnikov
/// coordinates of the curve in the n-punctured disk and already determine
/// it; `coords()` reports exactly those.
class Curve {
public:
  Curve(int n, std::vector<mpz_class> a, std::vector<mpz_class> b);

  int strands() const { return n_; }
  /// (a_2..a_{n-1}, b_2..b_{n-1})
  std::vector<mpz_class> coords() const;
  const std::vector<mpz_class> &a() const { return a_; }
  const std::vector<mpz_class> &b() const { return b_; }

  /// Right action of a single letter sigma_|g|^sign(g).
  void apply(int g);

  friend bool operator==(const Curve &, const Curve &) = default;

private:
  int n_;
  std::vector<mpz_class> a_;
  std::vector<mpz_class> b_;
};

std::vector<RoundCurve> round_curves(int n);
Curve round_to_coords(int n, RoundCurve c);
std::optional<RoundCurve> is_round(const Curve &c);

/// c . x, letter by letter.
Curve act(const BraidWord &x, const Curve &c);
/// c . x; Delta^2 acts trivially on curves so only p mod 2 is applied.
Curve act(const CanonicalForm &x, const Curve &c);
Curve act(const SimpleElement &s, const Curve &c);

/// First round curve (lexicographic) with c . x = c.
std::optional<RoundCurve> preserves_round_curve(const CanonicalForm &x);

struct AlmostRoundWitness {
  SimpleElement simple;
  RoundCurve round;
};

/// The almost-round curve named by a witness: the round curve carried by
/// s^{-1}, so that it is fixed by x exactly when s x s^{-1} fixes the round
/// curve.
Curve almost_round_curve(const AlmostRoundWitness &w);

inline constexpr int kMaxAlmostRoundStrands = 8;

/// Exhaustive search over (simple, round) pairs, round curves outermost and
/// simples by increasing length.  `tested`, when given, receives the number
/// of candidates examined.
std::optional<AlmostRoundWitness> find_invariant_almost_round(const CanonicalForm &x,
                                                              std::size_t *tested = nullptr);

/// All n! simple elements ordered by length, then permutation.
const std::vector<SimpleElement> &all_simples(int n);

} // namespace garside
