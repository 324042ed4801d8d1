#include "garside/sliding.hpp"

#include <unordered_map>

namespace garside {

SimpleElement preferred_prefix(const CanonicalForm &x) {
  const auto &f = x.factors();
  if (f.empty())
    return SimpleElement::identity(x.strands());
  return meet(tau(f.front(), -x.delta_exponent()), f.back().right_complement());
}

std::pair<CanonicalForm, SimpleElement> cyclic_sliding(const CanonicalForm &x) {
  SimpleElement t = preferred_prefix(x);
  if (t.is_trivial())
    return {x, t};
  return {conjugate(x, t), t};
}

bool is_rigid(const CanonicalForm &x) { return preferred_prefix(x).is_trivial(); }

SssDescent sss_descent(const CanonicalForm &x) {
  const int n = x.strands();
  const long window = static_cast<long>(n) * (n - 1) / 2 - 1;
  SssDescent out{x, CanonicalForm(n), 0};
  long stale = 0;
  while (stale < window) {
    auto [next, prefix] = cyclic_sliding(out.element);
    ++out.slidings;
    out.conjugator.append(prefix);
    stale = next.canonical_length() < out.element.canonical_length() ? 0 : stale + 1;
    out.element = std::move(next);
  }
  return out;
}

std::optional<std::size_t> Trajectory::first_repetition() const {
  if (!cycle_entry || !period)
    return std::nullopt;
  return *cycle_entry + *period;
}

Trajectory slide_to_circuit(const CanonicalForm &x, SlideMode mode) {
  Trajectory tr{x, {}, x, std::nullopt, std::nullopt, CanonicalForm(x.strands())};
  std::unordered_map<CanonicalForm, std::size_t> seen;
  const bool bounded = mode.kind == SlideMode::Kind::bounded;
  const long budget = bounded ? mode.factor * braid_length(x) : -1;

  CanonicalForm current = x;
  for (std::size_t k = 0;; ++k) {
    if (bounded && static_cast<long>(k) >= budget)
      break;
    if (!tr.cycle_entry) {
      auto [it, inserted] = seen.emplace(current, k);
      if (!inserted) {
        tr.cycle_entry = it->second;
        tr.period = k - it->second;
        if (!bounded)
          break;
      }
    }
    auto [next, prefix] = cyclic_sliding(current);
    tr.conjugator.append(prefix);
    tr.steps.push_back({std::move(current), prefix});
    current = std::move(next);
  }
  // a repeat exactly at the end of a bounded run
  if (bounded && !tr.cycle_entry) {
    if (auto it = seen.find(current); it != seen.end()) {
      tr.cycle_entry = it->second;
      tr.period = tr.steps.size() - it->second;
    }
  }
  tr.last = std::move(current);
  return tr;
}

} // namespace garside
