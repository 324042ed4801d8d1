#include "garside/curves.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>

namespace garside {

NoCurves::NoCurves(int n)
    : std::invalid_argument("no non-degenerate curves with " + std::to_string(n) + " punctures") {}

namespace {

void check_curve_strands(int n) {
  check_strands(n);
  if (n < 3)
    throw NoCurves(n);
}

inline mpz_class pos(const mpz_class &x) { return x > 0 ? x : mpz_class(0); }
inline mpz_class neg(const mpz_class &x) { return x < 0 ? x : mpz_class(0); }

} // namespace

Curve::Curve(int n, std::vector<mpz_class> a, std::vector<mpz_class> b)
    : n_(n), a_(std::move(a)), b_(std::move(b)) {
  check_curve_strands(n);
  if (a_.size() != static_cast<std::size_t>(n) || b_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("curve needs one coordinate pair per puncture");
}

std::vector<mpz_class> Curve::coords() const {
  std::vector<mpz_class> out;
  out.reserve(2 * static_cast<std::size_t>(n_) - 4);
  for (int k = 1; k + 1 < n_; ++k)
    out.push_back(a_[k]);
  for (int k = 1; k + 1 < n_; ++k)
    out.push_back(b_[k]);
  return out;
}

void Curve::apply(int g) {
  const int i = std::abs(g) - 1;
  if (g == 0 || i + 1 >= n_)
    throw InvalidGenerator(g, n_);
  mpz_class &a1 = a_[i], &b1 = b_[i], &a2 = a_[i + 1], &b2 = b_[i + 1];
  mpz_class na1, nb1, na2, nb2;
  if (g > 0) {
    const mpz_class z = a1 - neg(b1) - a2 + pos(b2);
    na1 = a1 + pos(b1) + pos(pos(b2) - z);
    nb1 = b2 - pos(z);
    na2 = a2 + neg(b2) + neg(neg(b1) + z);
    nb2 = b1 + pos(z);
  } else {
    const mpz_class z = a1 + neg(b1) - a2 - pos(b2);
    na1 = a1 - pos(b1) - pos(pos(b2) + z);
    nb1 = b2 + neg(z);
    na2 = a2 - neg(b2) - neg(neg(b1) - z);
    nb2 = b1 - neg(z);
  }
  a1 = std::move(na1);
  b1 = std::move(nb1);
  a2 = std::move(na2);
  b2 = std::move(nb2);
}

std::vector<RoundCurve> round_curves(int n) {
  check_curve_strands(n);
  std::vector<RoundCurve> out;
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo + 1; hi <= n; ++hi)
      if (!(lo == 1 && hi == n))
        out.push_back({lo, hi});
  return out;
}

Curve round_to_coords(int n, RoundCurve c) {
  check_curve_strands(n);
  if (c.lo < 1 || c.hi > n || c.lo >= c.hi || (c.lo == 1 && c.hi == n))
    throw std::invalid_argument("not a non-degenerate round curve");
  std::vector<mpz_class> a(n), b(n);
  b[c.lo - 1] = -1;
  b[c.hi - 1] = 1;
  return Curve(n, std::move(a), std::move(b));
}

std::optional<RoundCurve> is_round(const Curve &c) {
  const int n = c.strands();
  if (std::any_of(c.a().begin(), c.a().end(), [](const mpz_class &v) { return v != 0; }))
    return std::nullopt;
  std::optional<int> lo, hi;
  for (int k = 0; k < n; ++k) {
    const mpz_class &v = c.b()[k];
    if (v == 0)
      continue;
    if (v == -1 && !lo)
      lo = k + 1;
    else if (v == 1 && !hi)
      hi = k + 1;
    else
      return std::nullopt;
  }
  if (!lo || !hi || *lo >= *hi || (*lo == 1 && *hi == n))
    return std::nullopt;
  return RoundCurve{*lo, *hi};
}

Curve act(const BraidWord &x, const Curve &c) {
  if (x.n != c.strands())
    throw StrandMismatch(x.n, c.strands());
  Curve out = c;
  for (int g : x.letters)
    out.apply(g);
  return out;
}

Curve act(const CanonicalForm &x, const Curve &c) {
  if (x.strands() != c.strands())
    throw StrandMismatch(x.strands(), c.strands());
  Curve out = c;
  if (x.delta_exponent() % 2 != 0)
    for (int g : SimpleElement::delta(x.strands()).to_word())
      out.apply(g);
  for (const auto &f : x.factors())
    for (int g : f.to_word())
      out.apply(g);
  return out;
}

Curve act(const SimpleElement &s, const Curve &c) {
  if (s.strands() != c.strands())
    throw StrandMismatch(s.strands(), c.strands());
  Curve out = c;
  for (int g : s.to_word())
    out.apply(g);
  return out;
}

std::optional<RoundCurve> preserves_round_curve(const CanonicalForm &x) {
  for (const RoundCurve &rc : round_curves(x.strands())) {
    const Curve c = round_to_coords(x.strands(), rc);
    if (act(x, c) == c)
      return rc;
  }
  return std::nullopt;
}

Curve almost_round_curve(const AlmostRoundWitness &w) {
  const int n = w.simple.strands();
  Curve c = round_to_coords(n, w.round);
  const std::vector<int> word = w.simple.to_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    c.apply(-*it);
  return c;
}

const std::vector<SimpleElement> &all_simples(int n) {
  check_strands(n);
  static std::mutex mu;
  static std::map<int, std::vector<SimpleElement>> cache;
  std::lock_guard lock(mu);
  auto &v = cache[n];
  if (v.empty()) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do {
      v.emplace_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    std::stable_sort(v.begin(), v.end(), [](const SimpleElement &l, const SimpleElement &r) {
      return l.length() < r.length();
    });
  }
  return v;
}

std::optional<AlmostRoundWitness> find_invariant_almost_round(const CanonicalForm &x,
                                                              std::size_t *tested) {
  const int n = x.strands();
  if (n > kMaxAlmostRoundStrands)
    throw std::length_error("almost-round search is limited to " +
                            std::to_string(kMaxAlmostRoundStrands) + " strands");
  std::size_t count = 0;
  std::optional<AlmostRoundWitness> hit;
  for (const RoundCurve &rc : round_curves(n)) {
    for (const SimpleElement &s : all_simples(n)) {
      ++count;
      const AlmostRoundWitness w{s, rc};
      const Curve c = almost_round_curve(w);
      if (act(x, c) == c) {
        hit = w;
        break;
      }
    }
    if (hit)
      break;
  }
  if (tested)
    *tested += count;
  return hit;
}

} // namespace garside
