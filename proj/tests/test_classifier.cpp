#include <doctest.h>

#include <random>

#include "garside/classifier.hpp"
#include "support/convert.hpp"

using namespace garside;

namespace {

CanonicalForm nf(int n, std::vector<int> w) { return normal_form(BraidWord(n, std::move(w))); }

ClassifierConfig capped(long cap) {
  ClassifierConfig cfg;
  cfg.max_power = cap;
  return cfg;
}

} // namespace

TEST_CASE("periodicity test") {
  const auto d = is_periodic(CanonicalForm::delta_power(3, 1));
  REQUIRE(d);
  CHECK(d->power == 2);
  CHECK(d->delta_exponent == 2);

  const auto c = is_periodic(nf(3, {1, 2}));
  REQUIRE(c);
  CHECK(c->power == 3);
  CHECK(c->delta_exponent == 2);
  CHECK(support::burau_of(3, {1, 2, 1, 2, 1, 2}) == support::burau_of(3, {1, 2, 1, 1, 2, 1}));

  CHECK_FALSE(is_periodic(nf(3, {1})));
  CHECK_FALSE(power(nf(3, {1}), 2).is_delta_power());
  CHECK_FALSE(power(nf(3, {1}), 3).is_delta_power());
}

TEST_CASE("step 2") {
  const auto a = step2_find_rigid_power(nf(3, {1}));
  REQUIRE(a);
  CHECK(a->i == 1);
  CHECK(a->z == nf(3, {1}));
  CHECK(a->conjugator.is_identity());

  const auto b = step2_find_rigid_power(nf(3, {1, -2}));
  REQUIRE(b);
  CHECK(b->i == 1);
  CHECK(b->z == nf(3, {1, -2}));
  CHECK(b->conjugator.is_identity());

  // Forced on a periodic braid: its circuit {s1 s2, s2 s1} is not rigid.
  CHECK_FALSE(step2_find_rigid_power(nf(3, {1, 2}), capped(1)));

  const CanonicalForm x = nf(4, {2, 1, -3, -2, 1, 1});
  if (const auto r = step2_find_rigid_power(x, capped(10))) {
    CHECK(is_rigid(r->z));
    CHECK(conjugate(power(x, r->i), r->conjugator) == r->z);
  }
}

TEST_CASE("step 3") {
  const auto a = step3_curve_search(nf(3, {1}));
  REQUIRE(a);
  CHECK(*a->k == 1);
  CHECK(*a->round == RoundCurve{1, 2});
  CHECK_FALSE(a->simple_prefix);

  CHECK_FALSE(step3_curve_search(nf(3, {1, -2})));
  for (int k = 1; k <= 3; ++k) {
    const CanonicalForm zk = power(nf(3, {1, -2}), k);
    CHECK_FALSE(preserves_round_curve(zk));
    CHECK_FALSE(find_invariant_almost_round(zk));
  }

  CHECK_FALSE(is_rigid(nf(3, {2, 1, -2})));
  CHECK_THROWS_AS(step3_curve_search(nf(3, {2, 1, -2})), PreconditionError);
}

TEST_CASE("classify examples") {
  const Classification d = classify(BraidWord(3, {1, 2, 1}));
  CHECK(d.kind == Kind::periodic);

  const Classification s = classify(BraidWord(3, {1}));
  REQUIRE(s.kind == Kind::reducible);
  const auto &rc = std::get<ReducibleCert>(s.certificate);
  CHECK(rc.stage == ReducibleStage::step3_curve);
  CHECK(*rc.round == RoundCurve{1, 2});
  CHECK(*rc.power_i == 1);
  CHECK(*rc.k == 1);
  CHECK(verify_certificate(nf(3, {1}), s));

  const Classification pa = classify(BraidWord(3, {1, -2}));
  REQUIRE(pa.kind == Kind::pseudo_anosov);
  const auto &rig = std::get<RigidCert>(pa.certificate);
  CHECK(rig.rigid_element == nf(3, {1, -2}));
  CHECK(rig.power_m == 1);
  CHECK(verify_certificate(nf(3, {1, -2}), pa));

  const Classification conj = classify(BraidWord(3, {2, 1, -2}));
  REQUIRE(conj.kind == Kind::reducible);
  const auto &cc = std::get<ReducibleCert>(conj.certificate);
  CHECK(verify_certificate(nf(3, {2, 1, -2}), conj));
  const Curve fixed = certified_curve(cc, 3);
  CHECK(fixed == almost_round_curve({SimpleElement::generator(3, 2), {1, 2}}));
}

TEST_CASE("two strands") {
  CHECK(classify(BraidWord(2, {})).kind == Kind::degenerate);
  CHECK(classify(BraidWord(2, {1, 1, -1})).kind == Kind::periodic);
  CHECK(classify(BraidWord(2, {-1, -1, -1})).kind == Kind::periodic);
  const Classification c = classify(BraidWord(2, {}));
  CHECK(verify_certificate(nf(2, {}), c));
}

TEST_CASE("certificates are checked, not trusted") {
  Classification pa = classify(BraidWord(3, {1, -2}));
  auto &rig = std::get<RigidCert>(pa.certificate);
  rig.power_m = 2;
  CHECK_FALSE(verify_certificate(nf(3, {1, -2}), pa));

  Classification red = classify(BraidWord(3, {1}));
  std::get<ReducibleCert>(red.certificate).round = RoundCurve{2, 3};
  CHECK_FALSE(verify_certificate(nf(3, {1}), red));

  Classification per = classify(BraidWord(3, {1, 2}));
  std::get<PeriodicCert>(per.certificate).delta_exponent = 3;
  CHECK_FALSE(verify_certificate(nf(3, {1, 2}), per));

  Classification wrong = classify(BraidWord(3, {1, -2}));
  wrong.kind = Kind::reducible;
  CHECK_FALSE(verify_certificate(nf(3, {1, -2}), wrong));
}

TEST_CASE("default power cap") {
  CHECK(default_max_power(3) == 26);
  CHECK(default_max_power(4) == 215);
  const Classification c = classify(BraidWord(4, {1, 3}), capped(5));
  CHECK(c.stats.power_cap <= 5);
}

TEST_CASE("classification is a conjugacy invariant and certificates verify") {
  std::mt19937_64 rng(123);
  std::vector<CanonicalForm> pa;
  for (int k = 0; k < 200; ++k) {
    const int n = 3 + static_cast<int>(rng() % 2);
    const ClassifierConfig cfg = n == 3 ? ClassifierConfig{} : capped(30);
    const CanonicalForm w = nf(n, brute::random_word(n, 1 + rng() % 8, rng));
    const CanonicalForm u = nf(n, brute::random_word(n, rng() % 6, rng));
    const Classification a = classify(w, cfg);
    const Classification b = classify(conjugate(w, u), cfg);
    CHECK(a.kind == b.kind);
    CHECK(verify_certificate(w, a, cfg));
    CHECK(verify_certificate(conjugate(w, u), b, cfg));
    if (a.kind == Kind::pseudo_anosov)
      pa.push_back(w);
  }
  CHECK(!pa.empty());
  for (const auto &x : pa) {
    const ClassifierConfig cfg = x.strands() == 3 ? ClassifierConfig{} : capped(30);
    CHECK(classify(power(x, 2), cfg).kind == Kind::pseudo_anosov);
  }
}

TEST_CASE("bounded mode classifies the examples the same way") {
  ClassifierConfig cfg;
  cfg.mode = SlideMode::bounded(2);
  CHECK(classify(BraidWord(3, {1}), cfg).kind == Kind::reducible);
  CHECK(classify(BraidWord(3, {1, -2}), cfg).kind == Kind::pseudo_anosov);
  CHECK(classify(BraidWord(3, {2, 1, -2}), cfg).kind == Kind::reducible);
}

TEST_CASE("kind names round trip") {
  for (Kind k : {Kind::periodic, Kind::reducible, Kind::pseudo_anosov, Kind::degenerate})
    CHECK(kind_from_string(to_string(k)) == k);
  CHECK_THROWS(kind_from_string("unknown"));
}
