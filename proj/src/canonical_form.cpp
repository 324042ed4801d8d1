#include "garside/canonical_form.hpp"

#include <algorithm>
#include <cstdlib>

namespace garside {

CanonicalForm::CanonicalForm(int n) : n_(n) { check_strands(n); }

CanonicalForm CanonicalForm::delta_power(int n, long p) {
  CanonicalForm x(n);
  x.p_ = p;
  return x;
}

CanonicalForm CanonicalForm::from_simple(const SimpleElement &s) {
  CanonicalForm x(s.strands());
  x.append(s);
  return x;
}

CanonicalForm CanonicalForm::from_parts(int n, long p, const std::vector<SimpleElement> &factors) {
  CanonicalForm x = delta_power(n, p);
  for (const auto &f : factors)
    x.append(f);
  return x;
}

void CanonicalForm::append(const SimpleElement &s) {
  if (s.strands() != n_)
    throw StrandMismatch(n_, s.strands());
  if (s.is_trivial())
    return;
  if (s.is_delta()) {
    append_delta(1);
    return;
  }
  push_back_and_sweep(s);
}

void CanonicalForm::push_back_and_sweep(const SimpleElement &s) {
  factors_.push_back(s);
  for (std::size_t k = factors_.size() - 1; k > 0; --k) {
    auto [a, b] = compose_simple_pair(factors_[k - 1], factors_[k]);
    if (a == factors_[k - 1])
      break;
    factors_[k - 1] = a;
    factors_[k] = b;
  }
  strip();
}

void CanonicalForm::prepend(const SimpleElement &s) {
  if (s.strands() != n_)
    throw StrandMismatch(n_, s.strands());
  SimpleElement carry = tau(s, p_);
  if (carry.is_trivial())
    return;
  if (carry.is_delta()) {
    ++p_;
    return;
  }
  for (auto &f : factors_) {
    auto [a, b] = compose_simple_pair(carry, f);
    f = a;
    carry = b;
    if (carry.is_trivial())
      break;
  }
  if (!carry.is_trivial())
    factors_.push_back(carry);
  strip();
}

void CanonicalForm::append_delta(long k) {
  p_ += k;
  if (k % 2 != 0)
    for (auto &f : factors_)
      f = tau(f, 1);
}

void CanonicalForm::strip() {
  while (!factors_.empty() && factors_.back().is_trivial())
    factors_.pop_back();
  std::size_t lead = 0;
  while (lead < factors_.size() && factors_[lead].is_delta())
    ++lead;
  if (lead > 0) {
    factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(lead));
    p_ += static_cast<long>(lead);
  }
}

BraidWord CanonicalForm::to_word() const {
  BraidWord w;
  w.n = n_;
  const std::vector<int> d = SimpleElement::delta(n_).to_word();
  for (long i = 0; i < std::labs(p_); ++i)
    for (int g : d)
      w.letters.push_back(p_ > 0 ? g : -g);
  for (const auto &f : factors_)
    for (int g : f.to_word())
      w.letters.push_back(g);
  return w;
}

CanonicalForm normal_form(const BraidWord &w) {
  check_strands(w.n);
  CanonicalForm x(w.n);
  for (int g : w.letters) {
    if (g == 0 || std::abs(g) >= w.n)
      throw InvalidGenerator(g, w.n);
    const SimpleElement s = SimpleElement::generator(w.n, std::abs(g));
    if (g > 0) {
      x.append(s);
    } else {
      // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1})
      x.append_delta(-1);
      x.append(s.left_complement());
    }
  }
  return x;
}

CanonicalForm multiply(const CanonicalForm &x, const CanonicalForm &y) {
  if (x.strands() != y.strands())
    throw StrandMismatch(x.strands(), y.strands());
  CanonicalForm r = x;
  r.append_delta(y.delta_exponent());
  for (const auto &f : y.factors())
    r.append(f);
  return r;
}

CanonicalForm invert(const CanonicalForm &x) {
  // (Delta^p x_1..x_r)^{-1} = Delta^{-p-r} tau^{p+r}(d x_r) ... tau^{p+1}(d x_1),
  // d = right complement; the right-hand side is already left-weighted.
  const long p = x.delta_exponent();
  const auto &f = x.factors();
  const long r = static_cast<long>(f.size());
  CanonicalForm out = CanonicalForm::delta_power(x.strands(), -p - r);
  std::vector<SimpleElement> inv;
  inv.reserve(f.size());
  for (long j = r; j >= 1; --j)
    inv.push_back(tau(f[static_cast<std::size_t>(j - 1)].right_complement(), p + j));
  for (const auto &s : inv)
    out.append(s);
  return out;
}

CanonicalForm power(const CanonicalForm &x, long m) {
  if (m < 0)
    return power(invert(x), -m);
  CanonicalForm r(x.strands());
  for (long i = 0; i < m; ++i)
    r = multiply(r, x);
  return r;
}

CanonicalForm conjugate(const CanonicalForm &x, const SimpleElement &s) {
  CanonicalForm r = x;
  r.append(s);
  // s^{-1} = Delta^{-1} (Delta s^{-1})
  r.prepend(s.left_complement());
  r.prepend_delta(-1);
  return r;
}

CanonicalForm conjugate(const CanonicalForm &x, const CanonicalForm &w) {
  return multiply(multiply(invert(w), x), w);
}

CanonicalForm tau(const CanonicalForm &x, long k) {
  std::vector<SimpleElement> f;
  f.reserve(x.factors().size());
  for (const auto &s : x.factors())
    f.push_back(tau(s, k));
  return CanonicalForm::from_parts(x.strands(), x.delta_exponent(), f);
}

Lengths lengths(const CanonicalForm &x) {
  return {x.inf(), x.sup(), x.canonical_length(), braid_length(x)};
}

long braid_length(const CanonicalForm &x) {
  const long p = x.delta_exponent();
  const long r = x.canonical_length();
  return std::max({std::labs(p), r, p + r});
}

MixedForm mixed_canonical_form(const CanonicalForm &x) {
  const int n = x.strands();
  const long p = x.delta_exponent();
  if (p >= 0)
    return {CanonicalForm(n), x};
  const auto &f = x.factors();
  const auto k = static_cast<std::ptrdiff_t>(std::min<long>(-p, x.canonical_length()));
  const CanonicalForm negative =
      CanonicalForm::from_parts(n, p, std::vector<SimpleElement>(f.begin(), f.begin() + k));
  const CanonicalForm positive =
      CanonicalForm::from_parts(n, 0, std::vector<SimpleElement>(f.begin() + k, f.end()));
  return {invert(negative), positive};
}

std::size_t hash_value(const CanonicalForm &x) {
  std::size_t h = std::hash<long>{}(x.delta_exponent()) ^ (static_cast<std::size_t>(x.strands()) << 48);
  for (const auto &f : x.factors())
    h = h * 1000003u ^ hash_value(f);
  return h;
}

} // namespace garside
