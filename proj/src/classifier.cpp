#include "garside/classifier.hpp"

#include <algorithm>
#include <chrono>

namespace garside {

std::string to_string(Kind k) {
  switch (k) {
  case Kind::periodic:
    return "periodic";
  case Kind::reducible:
    return "reducible";
  case Kind::pseudo_anosov:
    return "pseudo_anosov";
  case Kind::degenerate:
    return "degenerate";
  }
  return "?";
}

Kind kind_from_string(const std::string &s) {
  if (s == "periodic")
    return Kind::periodic;
  if (s == "reducible")
    return Kind::reducible;
  if (s == "pseudo_anosov")
    return Kind::pseudo_anosov;
  if (s == "degenerate")
    return Kind::degenerate;
  throw std::invalid_argument("unknown kind '" + s + "'");
}

std::string to_string(ReducibleStage s) {
  return s == ReducibleStage::step2_no_rigid ? "step2_no_rigid" : "step3_curve";
}

long default_max_power(int n) {
  const long m = static_cast<long>(n) * (n - 1) / 2;
  return m * m * m - 1;
}

std::optional<PeriodicCert> is_periodic(const CanonicalForm &x) {
  const int n = x.strands();
  CanonicalForm xp = power(x, n - 1);
  if (xp.is_delta_power())
    return PeriodicCert{n - 1, xp.delta_exponent()};
  xp = multiply(xp, x);
  if (xp.is_delta_power())
    return PeriodicCert{n, xp.delta_exponent()};
  return std::nullopt;
}

std::optional<RigidPower> step2_find_rigid_power(const CanonicalForm &x, const ClassifierConfig &cfg,
                                                 ClassifyStats *stats) {
  ClassifyStats local;
  ClassifyStats &st = stats ? *stats : local;
  const long cap = cfg.max_power.value_or(default_max_power(x.strands()));
  st.power_cap = cap;
  CanonicalForm xi(x.strands());
  for (long i = 1; i <= cap; ++i) {
    xi = multiply(xi, x);
    ++st.powers_examined;
    SssDescent descent = sss_descent(xi);
    st.slidings += descent.slidings;
    Trajectory tr = slide_to_circuit(descent.element, cfg.mode);
    st.slidings += tr.slidings();
    // In cycle-detect mode `last` lies on the circuit; a circuit holding one
    // rigid element holds only rigid elements.
    if (is_rigid(tr.last)) {
      descent.conjugator = multiply(descent.conjugator, tr.conjugator);
      return RigidPower{i, std::move(tr.last), std::move(descent.conjugator)};
    }
  }
  return std::nullopt;
}

std::optional<ReducibleCert> step3_curve_search(const CanonicalForm &z, ClassifyStats *stats) {
  if (!is_rigid(z))
    throw PreconditionError("step3_curve_search needs a rigid braid");
  ClassifyStats local;
  ClassifyStats &st = stats ? *stats : local;
  const int n = z.strands();
  const auto rounds = round_curves(n);
  CanonicalForm zk(n);
  for (long k = 1; k <= n; ++k) {
    zk = multiply(zk, z);
    const auto round = preserves_round_curve(zk);
    st.candidates_tested +=
        round ? static_cast<std::size_t>(std::find(rounds.begin(), rounds.end(), *round) -
                                         rounds.begin()) + 1
              : rounds.size();
    if (round)
      return ReducibleCert{ReducibleStage::step3_curve, std::nullopt, k, std::nullopt, *round,
                           std::nullopt, z};
    if (auto w = find_invariant_almost_round(zk, &st.candidates_tested))
      return ReducibleCert{ReducibleStage::step3_curve, std::nullopt, k, w->simple, w->round,
                           std::nullopt, z};
  }
  return std::nullopt;
}

Classification classify(const CanonicalForm &x, const ClassifierConfig &cfg) {
  ClassifyStats st;
  const auto t0 = std::chrono::steady_clock::now();
  auto finish = [&](Kind kind, Certificate cert) {
    st.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return Classification{kind, std::move(cert), st};
  };

  // Step 1; for n = 2 every braid is a power of Delta = sigma_1 and stops here.
  if (auto cert = is_periodic(x))
    return finish(x.strands() == 2 && x.is_identity() ? Kind::degenerate : Kind::periodic, *cert);

  // Step 2
  auto rigid = step2_find_rigid_power(x, cfg, &st);
  if (!rigid) {
    st.under_power_cap = st.power_cap < default_max_power(x.strands());
    return finish(Kind::reducible, ReducibleCert{ReducibleStage::step2_no_rigid, std::nullopt,
                                                 std::nullopt, std::nullopt, std::nullopt,
                                                 std::nullopt, std::nullopt});
  }

  // Step 3
  if (auto cert = step3_curve_search(rigid->z, &st)) {
    cert->power_i = rigid->i;
    cert->conjugator = rigid->conjugator;
    return finish(Kind::reducible, std::move(*cert));
  }

  // Step 4
  return finish(Kind::pseudo_anosov,
                RigidCert{rigid->i, std::move(rigid->z), std::move(rigid->conjugator)});
}

Classification classify(const BraidWord &w, const ClassifierConfig &cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  Classification c = classify(normal_form(w), cfg);
  c.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

Curve certified_curve(const ReducibleCert &cert, int n) {
  if (cert.stage != ReducibleStage::step3_curve || !cert.round)
    throw std::invalid_argument("certificate carries no curve");
  Curve c = cert.simple_prefix ? almost_round_curve({*cert.simple_prefix, *cert.round})
                               : round_to_coords(n, *cert.round);
  if (cert.conjugator)
    c = act(invert(*cert.conjugator), c);
  return c;
}

namespace {

bool conjugates_to(const CanonicalForm &x, const CanonicalForm &w, const CanonicalForm &z) {
  return conjugate(x, w) == z;
}

} // namespace

bool verify_certificate(const CanonicalForm &x, const Classification &c,
                        const ClassifierConfig &cfg) {
  const int n = x.strands();
  if (const auto *p = std::get_if<PeriodicCert>(&c.certificate)) {
    const bool degenerate = n == 2 && x.is_identity();
    if (c.kind != (degenerate ? Kind::degenerate : Kind::periodic) ||
        (p->power != n - 1 && p->power != n))
      return false;
    return power(x, p->power) == CanonicalForm::delta_power(n, p->delta_exponent);
  }
  if (const auto *r = std::get_if<RigidCert>(&c.certificate)) {
    if (c.kind != Kind::pseudo_anosov || r->rigid_element.canonical_length() == 0)
      return false;
    return is_rigid(r->rigid_element) &&
           conjugates_to(power(x, r->power_m), r->conjugator, r->rigid_element);
  }
  const auto &cert = std::get<ReducibleCert>(c.certificate);
  if (c.kind != Kind::reducible)
    return false;
  if (cert.stage == ReducibleStage::step2_no_rigid) {
    ClassifierConfig rerun = cfg;
    rerun.max_power = c.stats.power_cap;
    return !is_periodic(x) && !step2_find_rigid_power(x, rerun);
  }
  if (!cert.power_i || !cert.k || !cert.round || !cert.conjugator || !cert.rigid_element)
    return false;
  const CanonicalForm &z = *cert.rigid_element;
  if (!is_rigid(z) || !conjugates_to(power(x, *cert.power_i), *cert.conjugator, z))
    return false;
  Curve on_z = cert.simple_prefix ? almost_round_curve({*cert.simple_prefix, *cert.round})
                                  : round_to_coords(n, *cert.round);
  if (act(power(z, *cert.k), on_z) != on_z)
    return false;
  const Curve on_x = certified_curve(cert, n);
  return act(power(x, *cert.power_i * *cert.k), on_x) == on_x;
}

} // namespace garside
