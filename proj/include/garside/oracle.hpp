#pragma once

#include <cstddef>
#include <stdexcept>
#include <unordered_set>

#include "garside/classifier.hpp"

namespace garside {

class OracleCapacityExceeded : public std::length_error {
public:
  explicit OracleCapacityExceeded(std::size_t cap);
};

struct SssSet {
  std::unordered_set<CanonicalForm> elements;
  long inf = 0;
  long sup = 0;
};

inline constexpr std::size_t kDefaultSssCap = 200000;

/// Full super summit set, by closure under conjugation by simple elements.
/// Independent of the sliding machinery.
SssSet enumerate_sss(const CanonicalForm &x, std::size_t cap = kDefaultSssCap);

/// True iff some round curve's orbit under y stays round and closes up.
bool preserves_round_family(const CanonicalForm &y);

/// Periodic by the power test; otherwise reducible iff some super summit
/// element preserves a family of round curves.
Kind oracle_classify(const CanonicalForm &x, std::size_t cap = kDefaultSssCap);
Kind oracle_classify(const BraidWord &w, std::size_t cap = kDefaultSssCap);

} // namespace garside
