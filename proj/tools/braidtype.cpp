// braidtype: command-line front end for the Garside engine and the
// Nielsen-Thurston classifier.
//
//   braidtype classify --strands N [--mode cycle-detect|bounded:K] [--max-power M] [--json|--text] WORD...
//   braidtype nf|slide|sss --strands N [--json|--text] WORD...
//   braidtype bench --strands N --lengths L1,L2,... --samples S --seed R
//   braidtype conjecture --strands N --lengths L1,L2,... --samples S --seed R
//
// WORD is a sequence of nonzero integers; g stands for sigma_|g|^sign(g).
// Exit codes: 0 success, 2 malformed input, 3 invalid strand count.

#include <charconv>
#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "garside/harness.hpp"
#include "garside/oracle.hpp"
#include "garside/run_record.hpp"

namespace {

using namespace garside;

constexpr int kExitParse = 2;
constexpr int kExitStrands = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BraidWord parse_word(int n, const std::vector<std::string> &tokens) {
  std::vector<int> letters;
  for (const auto &tok : tokens) {
    int g = 0;
    const char *first = tok.data();
    const char *last = tok.data() + tok.size();
    if (!tok.empty() && tok[0] == '+')
      ++first;
    auto [ptr, ec] = std::from_chars(first, last, g);
    if (ec != std::errc() || ptr != last || first == last)
      throw UsageError("not an integer: '" + tok + "'");
    if (g == 0 || g >= n || -g >= n)
      throw UsageError("generator " + tok + " out of range for " + std::to_string(n) + " strands");
    letters.push_back(g);
  }
  return BraidWord(n, std::move(letters));
}

SlideMode parse_mode(const std::string &s) {
  if (s == "cycle-detect")
    return SlideMode::cycle_detect();
  const std::string prefix = "bounded:";
  if (s.rfind(prefix, 0) == 0) {
    long k = 0;
    const std::string rest = s.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (ec == std::errc() && ptr == rest.data() + rest.size() && k > 0)
      return SlideMode::bounded(k);
  }
  throw UsageError("bad --mode '" + s + "' (cycle-detect or bounded:K)");
}

std::vector<std::size_t> parse_lengths(const std::string &s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
      throw UsageError("bad length '" + item + "'");
    out.push_back(v);
  }
  if (out.empty())
    throw UsageError("--lengths needs at least one value");
  return out;
}

std::string word_text(const std::vector<int> &w) {
  std::string s;
  for (int g : w)
    s += (s.empty() ? "" : " ") + std::to_string(g);
  return s.empty() ? "e" : s;
}

std::string form_text(const CanonicalForm &x) {
  std::string s = "Delta^" + std::to_string(x.delta_exponent());
  for (const auto &f : x.factors())
    s += " . [" + word_text(f.to_word()) + "]";
  return s;
}

Json form_with_words(const CanonicalForm &x) {
  Json j = to_json(x);
  Json words = Json::array();
  for (const auto &f : x.factors())
    words.push_back(f.to_word());
  j["factor_words"] = std::move(words);
  return j;
}

struct Common {
  int n = 0;
  std::vector<std::string> tokens;
  bool text = false;
};

void add_common(CLI::App *cmd, Common &c) {
  cmd->add_option("--strands", c.n, "strand count")->required();
  cmd->add_option("word", c.tokens, "signed generator indices");
  auto *json = cmd->add_flag("--json", "JSON output (default)");
  cmd->add_flag("--text", c.text, "plain-text output")->excludes(json);
}

void check_n(int n) {
  if (n < 2 || n > kMaxStrands)
    throw InvalidStrandCount(n);
}

int run_classify(const Common &c, const std::string &mode, std::optional<long> max_power) {
  check_n(c.n);
  const BraidWord w = parse_word(c.n, c.tokens);
  ClassifierConfig cfg;
  cfg.mode = parse_mode(mode);
  if (max_power) {
    if (*max_power < 1)
      throw UsageError("--max-power must be positive");
    cfg.max_power = max_power;
  }
  const RunRecord rec{c.n, w.letters, classify(w, cfg)};
  if (!c.text) {
    std::cout << serialize(rec) << '\n';
    return 0;
  }
  std::cout << "kind: " << to_string(rec.result.kind);
  if (rec.result.stats.under_power_cap)
    std::cout << " (under power cap " << rec.result.stats.power_cap << ")";
  std::cout << '\n' << "certificate: " << to_json(rec.result.certificate, c.n).dump(2) << '\n'
            << "stats: " << to_json(rec.result.stats).dump() << '\n';
  return 0;
}

int run_nf(const Common &c) {
  check_n(c.n);
  const CanonicalForm x = normal_form(parse_word(c.n, c.tokens));
  const Lengths len = lengths(x);
  if (c.text) {
    std::cout << form_text(x) << '\n'
              << "inf " << len.inf << " sup " << len.sup << " canonical_length "
              << len.canonical_len << " braid_length " << len.braid_len << '\n';
    return 0;
  }
  Json j = form_with_words(x);
  j["inf"] = len.inf;
  j["sup"] = len.sup;
  j["canonical_length"] = len.canonical_len;
  j["braid_length"] = len.braid_len;
  const MixedForm m = mixed_canonical_form(x);
  j["mixed"] = Json{{"a", form_with_words(m.a)}, {"b", form_with_words(m.b)}};
  Json out{{"n", c.n}};
  out.update(j);
  std::cout << out.dump() << '\n';
  return 0;
}

int run_slide(const Common &c) {
  check_n(c.n);
  const CanonicalForm x = normal_form(parse_word(c.n, c.tokens));
  const auto [y, prefix] = cyclic_sliding(x);
  if (c.text) {
    std::cout << "element: " << form_text(y) << '\n'
              << "prefix: [" << word_text(prefix.to_word()) << "]\n";
    return 0;
  }
  std::cout << Json{{"n", c.n},
                    {"input", form_with_words(x)},
                    {"element", form_with_words(y)},
                    {"prefix", to_json(prefix)},
                    {"prefix_word", prefix.to_word()},
                    {"rigid", prefix.is_trivial()}}
                   .dump()
            << '\n';
  return 0;
}

int run_sss(const Common &c) {
  check_n(c.n);
  const CanonicalForm x = normal_form(parse_word(c.n, c.tokens));
  const SssDescent d = sss_descent(x);
  if (c.text) {
    std::cout << "element: " << form_text(d.element) << '\n'
              << "conjugator: " << form_text(d.conjugator) << '\n'
              << "inf " << d.element.inf() << " sup " << d.element.sup() << '\n';
    return 0;
  }
  std::cout << Json{{"n", c.n},
                    {"element", form_with_words(d.element)},
                    {"conjugator", form_with_words(d.conjugator)},
                    {"inf", d.element.inf()},
                    {"sup", d.element.sup()},
                    {"slidings", d.slidings}}
                   .dump()
            << '\n';
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Garside normal forms and Nielsen-Thurston classification of braids"};
  app.require_subcommand(1);

  Common common;
  std::string mode = "cycle-detect";
  std::optional<long> max_power;
  auto *classify_cmd = app.add_subcommand("classify", "periodic / reducible / pseudo_anosov");
  add_common(classify_cmd, common);
  classify_cmd->add_option("--mode", mode, "cycle-detect or bounded:K");
  classify_cmd->add_option("--max-power", max_power, "cap on the powers examined");

  auto *nf_cmd = app.add_subcommand("nf", "left normal form and lengths");
  add_common(nf_cmd, common);
  auto *slide_cmd = app.add_subcommand("slide", "one cyclic sliding");
  add_common(slide_cmd, common);
  auto *sss_cmd = app.add_subcommand("sss", "descend into the super summit set");
  add_common(sss_cmd, common);

  int bench_n = 0;
  std::string lengths_arg;
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  auto *bench_cmd = app.add_subcommand("bench", "classify timing vs length (CSV)");
  auto *conj_cmd = app.add_subcommand("conjecture", "sliding-circuit entry times (CSV)");
  for (auto *cmd : {bench_cmd, conj_cmd}) {
    cmd->add_option("--strands", bench_n, "strand count")->required();
    cmd->add_option("--lengths", lengths_arg, "comma-separated word lengths")->required();
    cmd->add_option("--samples", samples, "samples per length");
    cmd->add_option("--seed", seed, "random seed");
  }
  std::string bench_mode = "cycle-detect";
  std::optional<long> bench_max_power;
  bench_cmd->add_option("--mode", bench_mode, "cycle-detect or bounded:K");
  bench_cmd->add_option("--max-power", bench_max_power, "cap on the powers examined");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (classify_cmd->parsed())
      return run_classify(common, mode, max_power);
    if (nf_cmd->parsed())
      return run_nf(common);
    if (slide_cmd->parsed())
      return run_slide(common);
    if (sss_cmd->parsed())
      return run_sss(common);
    check_n(bench_n);
    const auto lengths = parse_lengths(lengths_arg);
    if (bench_cmd->parsed()) {
      BenchConfig cfg{bench_n, lengths, samples, seed, {}};
      cfg.classifier.mode = parse_mode(bench_mode);
      cfg.classifier.max_power = bench_max_power;
      const auto rows = run_bench(cfg);
      write_bench_csv(std::cout, rows);
      std::cerr << "loglog_slope " << loglog_slope(rows) << '\n';
      return 0;
    }
    write_conjecture_csv(std::cout, run_conjecture({bench_n, lengths, samples, seed}));
    return 0;
  } catch (const InvalidStrandCount &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitStrands;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidGenerator &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
