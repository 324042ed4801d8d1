#pragma once

#include "garside/canonical_form.hpp"
#include "support/brute_force.hpp"

namespace support {

inline brute::Perm perm_of(const garside::SimpleElement &s) {
  brute::Perm p = s.permutation().images();
  for (auto &v : p)
    --v;
  return p;
}

inline garside::SimpleElement simple_of(const brute::Perm &p) {
  std::vector<int> img(p.begin(), p.end());
  for (auto &v : img)
    ++v;
  return garside::SimpleElement(garside::Permutation(img));
}

/// Burau image of a normal form, built from the brute-force factor words.
inline brute::Burau::Matrix burau_of(const garside::CanonicalForm &x) {
  std::vector<brute::Perm> fs;
  for (const auto &f : x.factors())
    fs.push_back(perm_of(f));
  return brute::Burau(x.strands()).eval_form(x.delta_exponent(), fs);
}

inline brute::Burau::Matrix burau_of(int n, const std::vector<int> &word) {
  return brute::Burau(n).eval(word);
}

} // namespace support
