#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "garside/canonical_form.hpp"

namespace garside {

/// Maximal prefix t of tau^{-p}(x_1) with x_r t simple; trivial when r = 0.
SimpleElement preferred_prefix(const CanonicalForm &x);

/// Conjugation by the preferred prefix.  Returns (slid element, prefix).
std::pair<CanonicalForm, SimpleElement> cyclic_sliding(const CanonicalForm &x);

bool is_rigid(const CanonicalForm &x);

struct SssDescent {
  CanonicalForm element;    // conjugator^{-1} x conjugator
  CanonicalForm conjugator;
  std::size_t slidings = 0;
};

/// Slides until canonical length has failed to drop for n(n-1)/2 - 1
/// consecutive slidings, which lands in the super summit set.
SssDescent sss_descent(const CanonicalForm &x);

struct SlideMode {
  enum class Kind { cycle_detect, bounded };
  Kind kind = Kind::cycle_detect;
  long factor = 0; // K for bounded mode

  static SlideMode cycle_detect() { return {}; }
  static SlideMode bounded(long k) { return {Kind::bounded, k}; }
};

struct TrajectoryStep {
  CanonicalForm element;
  SimpleElement prefix; // element conjugated by prefix gives the next element
};

/// Iterated cyclic slidings.  steps[k].element is s^k(start); `last` is the
/// element reached after the final step.
struct Trajectory {
  CanonicalForm start;
  std::vector<TrajectoryStep> steps;
  CanonicalForm last;
  /// Index of the element that `last` (or the first repeat, in bounded
  /// mode) equals.
  std::optional<std::size_t> cycle_entry;
  /// Slidings between the first occurrence of the repeated element and its
  /// recurrence.
  std::optional<std::size_t> period;
  /// Ordered product of all prefixes; conjugates start to last.
  CanonicalForm conjugator;

  std::size_t slidings() const { return steps.size(); }
  /// First index t with s^t(start) = s^k(start) for some k < t, if seen.
  std::optional<std::size_t> first_repetition() const;
};

Trajectory slide_to_circuit(const CanonicalForm &x, SlideMode mode = SlideMode::cycle_detect());

} // namespace garside
