#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "garside/classifier.hpp"

namespace garside {

/// Uniform random word: each letter uniform over +-1..+-(n-1).
BraidWord random_word(int n, std::size_t length, std::mt19937_64 &rng);

struct BenchConfig {
  int n = 3;
  std::vector<std::size_t> lengths;
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  ClassifierConfig classifier;
};

struct BenchRow {
  int n;
  std::size_t length;
  std::size_t samples;
  double median_braid_len;
  double median_wall_ms;
  double median_slidings;
};

/// Rows ordered by length; lengths with zero samples produce no row.
std::vector<BenchRow> run_bench(const BenchConfig &cfg);
void write_bench_csv(std::ostream &os, const std::vector<BenchRow> &rows);
/// Least-squares slope of log(median time) against log(median |x|);
/// NaN with fewer than two usable rows.
double loglog_slope(const std::vector<BenchRow> &rows);

struct ConjectureConfig {
  int n = 3;
  std::vector<std::size_t> lengths;
  std::size_t samples = 20;
  std::uint64_t seed = 1;
};

struct ConjectureRow {
  int n;
  std::size_t length;
  std::size_t sample;
  long canonical_len; // r, after descent into the super summit set
  long braid_len;
  std::size_t t;      // first index with s^t = s^k for some k < t
};

std::vector<ConjectureRow> run_conjecture(const ConjectureConfig &cfg);
void write_conjecture_csv(std::ostream &os, const std::vector<ConjectureRow> &rows);

double median(std::vector<double> v);

} // namespace garside
