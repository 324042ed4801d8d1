#include "garside/harness.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

namespace garside {

BraidWord random_word(int n, std::size_t length, std::mt19937_64 &rng) {
  check_strands(n);
  std::uniform_int_distribution<int> pick(0, 2 * (n - 1) - 1);
  std::vector<int> letters(length);
  for (auto &g : letters) {
    const int v = pick(rng);
    g = v < n - 1 ? v + 1 : -(v - (n - 1) + 1);
  }
  return BraidWord(n, std::move(letters));
}

double median(std::vector<double> v) {
  if (v.empty())
    return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

std::vector<BenchRow> run_bench(const BenchConfig &cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<BenchRow> rows;
  for (std::size_t length : cfg.lengths) {
    if (cfg.samples == 0)
      continue;
    std::vector<double> lens, times, slides;
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      const BraidWord w = random_word(cfg.n, length, rng);
      lens.push_back(static_cast<double>(braid_length(normal_form(w))));
      const Classification c = classify(w, cfg.classifier);
      times.push_back(c.stats.wall_ms);
      slides.push_back(static_cast<double>(c.stats.slidings));
    }
    rows.push_back({cfg.n, length, cfg.samples, median(lens), median(times), median(slides)});
  }
  return rows;
}

void write_bench_csv(std::ostream &os, const std::vector<BenchRow> &rows) {
  os << "n,L,samples,median_braid_len,median_wall_ms,median_slidings\n";
  for (const auto &r : rows)
    os << r.n << ',' << r.length << ',' << r.samples << ',' << r.median_braid_len << ','
       << std::fixed << std::setprecision(4) << r.median_wall_ms << std::defaultfloat << ','
       << r.median_slidings << '\n';
}

double loglog_slope(const std::vector<BenchRow> &rows) {
  std::vector<std::pair<double, double>> pts;
  for (const auto &r : rows)
    if (r.median_braid_len > 0 && r.median_wall_ms > 0)
      pts.emplace_back(std::log(r.median_braid_len), std::log(r.median_wall_ms));
  if (pts.size() < 2)
    return std::numeric_limits<double>::quiet_NaN();
  double mx = 0, my = 0;
  for (auto [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0, sxx = 0;
  for (auto [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  return sxx > 0 ? sxy / sxx : std::numeric_limits<double>::quiet_NaN();
}

std::vector<ConjectureRow> run_conjecture(const ConjectureConfig &cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<ConjectureRow> rows;
  for (std::size_t length : cfg.lengths) {
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      const BraidWord w = random_word(cfg.n, length, rng);
      const CanonicalForm y = sss_descent(normal_form(w)).element;
      const Trajectory tr = slide_to_circuit(y);
      rows.push_back({cfg.n, length, s, y.canonical_length(), braid_length(y),
                      *tr.first_repetition()});
    }
  }
  return rows;
}

void write_conjecture_csv(std::ostream &os, const std::vector<ConjectureRow> &rows) {
  os << "n,L,sample,r,braid_len,t\n";
  for (const auto &r : rows)
    os << r.n << ',' << r.length << ',' << r.sample << ',' << r.canonical_len << ','
       << r.braid_len << ',' << r.t << '\n';
}

} // namespace garside
