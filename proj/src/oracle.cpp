#include "garside/oracle.hpp"

#include <variant>
#include <vector>

namespace garside {

OracleCapacityExceeded::OracleCapacityExceeded(std::size_t cap)
    : std::length_error("super summit set exceeds oracle capacity " + std::to_string(cap)) {}

namespace {

/// Closes the (inf, sup) level set of seed; returns a strictly better
/// conjugate instead if one turns up.
std::variant<SssSet, CanonicalForm> close_level(const CanonicalForm &seed, std::size_t cap) {
  SssSet out;
  out.inf = seed.inf();
  out.sup = seed.sup();
  out.elements.insert(seed);
  std::vector<CanonicalForm> frontier{seed};
  const auto &simples = all_simples(seed.strands());
  while (!frontier.empty()) {
    const CanonicalForm y = std::move(frontier.back());
    frontier.pop_back();
    for (const auto &s : simples) {
      if (s.is_trivial())
        continue;
      CanonicalForm c = conjugate(y, s);
      if (c.inf() < out.inf || c.sup() > out.sup)
        continue;
      if (c.inf() > out.inf || c.sup() < out.sup)
        return c;
      if (out.elements.insert(c).second) {
        if (out.elements.size() > cap)
          throw OracleCapacityExceeded(cap);
        frontier.push_back(std::move(c));
      }
    }
  }
  return out;
}

} // namespace

SssSet enumerate_sss(const CanonicalForm &x, std::size_t cap) {
  // Conjugation by simple elements (Delta included, giving tau) covers
  // cycling and decycling, which never worsen inf or sup; so a level set
  // that is not minimal always contains an exit to a better one.
  CanonicalForm seed = x;
  while (true) {
    auto level = close_level(seed, cap);
    if (auto *done = std::get_if<SssSet>(&level))
      return std::move(*done);
    seed = std::get<CanonicalForm>(std::move(level));
  }
}

bool preserves_round_family(const CanonicalForm &y) {
  const int n = y.strands();
  const auto rounds = round_curves(n);
  for (const RoundCurve &rc : rounds) {
    const Curve start = round_to_coords(n, rc);
    Curve cur = start;
    for (std::size_t step = 0; step < rounds.size(); ++step) {
      cur = act(y, cur);
      if (!is_round(cur))
        break;
      if (cur == start)
        return true;
    }
  }
  return false;
}

Kind oracle_classify(const CanonicalForm &x, std::size_t cap) {
  if (is_periodic(x))
    return x.strands() == 2 && x.is_identity() ? Kind::degenerate : Kind::periodic;
  for (const auto &y : enumerate_sss(x, cap).elements)
    if (preserves_round_family(y))
      return Kind::reducible;
  return Kind::pseudo_anosov;
}

Kind oracle_classify(const BraidWord &w, std::size_t cap) {
  return oracle_classify(normal_form(w), cap);
}

} // namespace garside
