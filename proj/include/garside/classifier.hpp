#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "garside/curves.hpp"
#include "garside/sliding.hpp"

namespace garside {

/// degenerate: the trivial braid on two strands, where no curve exists.
enum class Kind { periodic, reducible, pseudo_anosov, degenerate };

std::string to_string(Kind k);
Kind kind_from_string(const std::string &s);

class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// x^power = Delta^delta_exponent.
struct PeriodicCert {
  long power;
  long delta_exponent;
  friend bool operator==(const PeriodicCert &, const PeriodicCert &) = default;
};

enum class ReducibleStage { step2_no_rigid, step3_curve };

std::string to_string(ReducibleStage s);

/// step2_no_rigid: no power up to the cap slid into a rigid circuit.
/// step3_curve: rigid_element^k fixes the certified curve, which is `round`
/// itself or, when simple_prefix is set, the almost-round curve
/// (simple_prefix, round).  conjugator^{-1} x^power_i conjugator =
/// rigid_element.
struct ReducibleCert {
  ReducibleStage stage;
  std::optional<long> power_i;
  std::optional<long> k;
  std::optional<SimpleElement> simple_prefix;
  std::optional<RoundCurve> round;
  std::optional<CanonicalForm> conjugator;
  std::optional<CanonicalForm> rigid_element;
  friend bool operator==(const ReducibleCert &, const ReducibleCert &) = default;
};

/// conjugator^{-1} x^power_m conjugator = rigid_element, which is rigid.
struct RigidCert {
  long power_m;
  CanonicalForm rigid_element;
  CanonicalForm conjugator;
  friend bool operator==(const RigidCert &, const RigidCert &) = default;
};

using Certificate = std::variant<PeriodicCert, ReducibleCert, RigidCert>;

struct ClassifyStats {
  std::size_t slidings = 0;
  std::size_t powers_examined = 0;
  std::size_t candidates_tested = 0;
  double wall_ms = 0.0;
  long power_cap = 0;
  bool under_power_cap = false;
  friend bool operator==(const ClassifyStats &, const ClassifyStats &) = default;
};

struct Classification {
  Kind kind;
  Certificate certificate;
  ClassifyStats stats;
};

struct ClassifierConfig {
  SlideMode mode = SlideMode::cycle_detect();
  /// Defaults to (n(n-1)/2)^3 - 1 when unset.
  std::optional<long> max_power;
};

long default_max_power(int n);

std::optional<PeriodicCert> is_periodic(const CanonicalForm &x);

struct RigidPower {
  long i;
  CanonicalForm z;          // rigid, conjugate to x^i
  CanonicalForm conjugator; // conjugator^{-1} x^i conjugator = z
};

std::optional<RigidPower> step2_find_rigid_power(const CanonicalForm &x,
                                                 const ClassifierConfig &cfg = {},
                                                 ClassifyStats *stats = nullptr);

/// Round or almost-round curve fixed by some z^k, k = 1..n.  The returned
/// certificate carries k, the curve and rigid_element = z; the caller fills
/// in power_i and conjugator.
std::optional<ReducibleCert> step3_curve_search(const CanonicalForm &z,
                                                ClassifyStats *stats = nullptr);

Classification classify(const CanonicalForm &x, const ClassifierConfig &cfg = {});
Classification classify(const BraidWord &w, const ClassifierConfig &cfg = {});

/// The curve a step-3 certificate says is fixed by x^(power_i * k).
Curve certified_curve(const ReducibleCert &cert, int n);

/// Re-checks every claim in the certificate by direct computation.  A
/// step-2 verdict is re-derived by rerunning the power loop with `cfg`'s
/// slide mode and the recorded cap.
bool verify_certificate(const CanonicalForm &x, const Classification &c,
                        const ClassifierConfig &cfg = {});

} // namespace garside
