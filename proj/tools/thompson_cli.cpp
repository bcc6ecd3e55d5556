// thompson: simulate the exchange, run the attacks, benchmark normal forms.
//
// Exit status: 0 success, 1 verification failure, 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "thompson/attack.hpp"
#include "thompson/convert.hpp"
#include "thompson/io.hpp"
#include "thompson/sweep.hpp"
#include "thompson/timing.hpp"

using namespace thompson;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;

struct RunConfig {
  unsigned s = 4;
  std::size_t w_length = 256;
  std::size_t key_length = 256;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string variant = "su";
  std::string method = "all";
  std::string target;
  std::string format = "json";
  std::optional<std::uint32_t> scale_limit;
  std::optional<int> threads;
  bool include_private = false;
  std::string transcript_path;
  std::string output_path;
  // bench-nf
  int min_exp = 10;
  int max_exp = 20;
  int repetitions = 7;
  int quadratic_max_exp = 14;
  std::string algorithm = "dc";
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output_path);
  if (!out) throw InputError("cannot write " + cfg.output_path);
  out << text;
}

std::string render(const RunConfig& cfg, const json& doc, const std::string& text) {
  return cfg.format == "json" ? doc.dump(2) + "\n" : text;
}

int report_error(const char* kind, const std::string& message, int code) {
  std::cerr << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
  return code;
}

// exchange ------------------------------------------------------------------

int cmd_exchange(const RunConfig& cfg) {
  ExchangeParams p;
  p.variant = parse_variant(cfg.variant);
  p.s = cfg.s;
  p.w_length = cfg.w_length;
  p.key_length = cfg.key_length;
  p.seed = cfg.seed;
  const Exchange x = run_exchange(p);
  const bool agree = x.key_alice == x.key_bob;
  std::optional<PrivateSection> priv;
  if (cfg.include_private) priv = PrivateSection{x.alice, x.bob, x.key_alice};
  json doc = transcript_to_json(x.transcript, priv);
  doc["keys_agree"] = agree;

  std::ostringstream text;
  text << "variant " << to_string(p.variant) << "\ns " << p.s << "\nw " << x.transcript.pub.w().to_string()
       << "\nu1 " << x.transcript.u1.to_string() << "\nu2 " << x.transcript.u2.to_string() << "\nbranch "
       << to_string(x.transcript.pub.branch()) << "\nkeys_agree " << (agree ? "true" : "false") << "\n";
  if (priv) text << "key " << x.key_alice.value.to_string() << "\n";
  emit(cfg, render(cfg, doc, text.str()));
  return agree ? kOk : kVerificationFailure;
}

// attack --------------------------------------------------------------------

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("not JSON: ") + e.what());
  }
}

std::vector<Method> methods_for(const RunConfig& cfg, const Transcript& t) {
  if (cfg.method != "all") return {parse_method(cfg.method)};
  return applicable_methods(t.variant, t.pub.s());
}

AttackResult run_method(Method m, const Transcript& t, const std::string& target) {
  switch (m) {
    case Method::kRestriction:
      return attack_restriction(t);
    case Method::kTransitivity: {
      Party p = t.pub.branch() == Branch::kAtOrBelow ? Party::kAlice : Party::kBob;
      if (target == "alice") p = Party::kAlice;
      if (target == "bob") p = Party::kBob;
      return attack_transitivity(t, p);
    }
    case Method::kWordLevel:
      return attack_word_level(t);
    case Method::kKL:
      return attack_kl(t);
  }
  throw std::logic_error("unknown method");
}

int cmd_attack(const RunConfig& cfg) {
  const json doc = load_document(cfg.transcript_path);
  const Transcript t = transcript_from_json(doc);
  const auto priv = private_from_json(doc);
  const std::optional<SharedKey> honest = priv ? std::optional<SharedKey>(priv->key) : std::nullopt;

  std::vector<AttackResult> results;
  for (const Method m : methods_for(cfg, t)) results.push_back(run_method(m, t, cfg.target));

  bool ok = true;
  bool agree = true;
  json arr = json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    ok = ok && r.verification.all_true() && (!honest || r.key == *honest);
    agree = agree && r.key == results.front().key;
    arr.push_back(attack_result_to_json(r, honest));
    text << to_string(r.method) << ": cracked " << to_string(r.cracked_party) << " (" << to_string(r.branch)
         << "), verified " << (r.verification.all_true() ? "true" : "false") << "\n  key " << r.key.value.to_string()
         << "\n";
  }
  json out = results.size() == 1 ? arr.front() : json{{"results", arr}, {"keys_agree", agree}};
  if (results.size() > 1) text << "keys_agree " << (agree ? "true" : "false") << "\n";
  emit(cfg, render(cfg, out, text.str()));
  return ok && agree ? kOk : kVerificationFailure;
}

// bench-nf ------------------------------------------------------------------

json timings_json(const std::vector<NfTiming>& t, const std::vector<double>& ratios) {
  json lengths = json::array();
  json medians = json::array();
  for (const auto& x : t) {
    lengths.push_back(x.length);
    medians.push_back(x.median_seconds);
  }
  return {{"lengths", lengths}, {"median_seconds", medians}, {"ratios_4n_over_n", ratios}};
}

int cmd_bench_nf(const RunConfig& cfg) {
  if (cfg.min_exp < 1 || cfg.max_exp > 24 || cfg.min_exp > cfg.max_exp) throw InputError("bad exponent range");
  NfAlgorithm algo = NfAlgorithm::kDivideConquer;
  if (cfg.algorithm == "parallel") algo = NfAlgorithm::kParallel;
  std::vector<std::size_t> lengths;
  for (int k = cfg.min_exp; k <= cfg.max_exp; ++k) lengths.push_back(std::size_t{1} << k);
  const auto timings = time_nf(algo, lengths, cfg.repetitions, cfg.seed);
  const auto ratios = growth_ratios(timings);
  bool pass = true;
  for (const double r : ratios) pass = pass && r <= 5.0;

  std::vector<std::size_t> qlengths;
  for (int k = cfg.min_exp; k <= std::min(cfg.quadratic_max_exp, cfg.max_exp); ++k) {
    qlengths.push_back(std::size_t{1} << k);
  }
  const auto qtimings = time_nf(NfAlgorithm::kQuadratic, qlengths, std::max(1, cfg.repetitions / 2), cfg.seed);
  const auto qratios = growth_ratios(qtimings);

  json doc = timings_json(timings, ratios);
  doc["algorithm"] = cfg.algorithm;
  doc["soft_pass"] = pass;
  doc["quadratic_reference"] = timings_json(qtimings, qratios);

  std::ostringstream text;
  text << "length      median_s     ratio\n";
  for (std::size_t i = 0; i < timings.size(); ++i) {
    char line[96];
    const double r = i >= 2 && timings[i - 2].median_seconds > 0
                         ? timings[i].median_seconds / timings[i - 2].median_seconds
                         : 0.0;
    std::snprintf(line, sizeof line, "%-10zu  %.6f  %s\n", timings[i].length, timings[i].median_seconds,
                  i >= 2 ? std::to_string(r).substr(0, 5).c_str() : "-");
    text << line;
  }
  text << "soft_pass " << (pass ? "true" : "false") << "\nquadratic reference ratios:";
  for (const double r : qratios) text << " " << std::to_string(r).substr(0, 5);
  text << "\n";
  emit(cfg, render(cfg, doc, text.str()));
  return pass ? kOk : kVerificationFailure;
}

// selftest ------------------------------------------------------------------

struct Check {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> errors;

  void record(bool ok) {
    ++cases;
    failures += ok ? 0 : 1;
  }
  void error(const std::string& what) {
    ++cases;
    ++failures;
    if (errors.size() < 5) errors.push_back(what);
  }
};

template <typename F>
void guarded(Check& c, F&& body) {
  try {
    c.record(body());
  } catch (const std::exception& e) {
    c.error(e.what());
  }
}

std::vector<Check> invariant_checks(const RunConfig& cfg) {
  std::vector<Check> out;
  if (cfg.trials == 0) return out;
  Rng rng(cfg.seed);
  Check commute{"commutation"};
  Check closed{"closed-form product"};
  Check homo{"homomorphism and round trip"};
  Check member{"subgroup characterization"};
  for (std::size_t k = 0; k < cfg.trials; ++k) {
    const unsigned s = 2 + static_cast<unsigned>(k % 5);
    guarded(commute, [&] {
      const NormalForm a = sample_A(s, 32, rng);
      const NormalForm b = sample_B(s, 32, rng);
      return nf_multiply(a, b) == nf_multiply(b, a);
    });
    guarded(closed, [&] {
      const NormalForm a = sample_A(s, 32, rng);
      const NormalForm b = sample_B(s, 32, rng);
      return nf_product_special(a, b, s) == nf_multiply(a, b);
    });
    guarded(homo, [&] {
      const NormalForm a = nf_from_word(random_word(40, 6, rng));
      const NormalForm b = nf_from_word(random_word(40, 6, rng));
      return word_to_pl(nf_multiply(a, b)) == pl_compose(word_to_pl(a), word_to_pl(b)) &&
             pl_to_word(word_to_pl(a)) == a;
    });
    guarded(member, [&] {
      const NormalForm g = nf_from_word(random_word(20, s + 2, rng));
      return in_A(g, s) == pl_supported_in(word_to_pl(g), {Dyadic(0), phi(s)});
    });
  }
  out.push_back(std::move(commute));
  out.push_back(std::move(closed));
  out.push_back(std::move(homo));
  out.push_back(std::move(member));
  return out;
}

Check sweep_check(const char* name, Variant v, const RunConfig& cfg) {
  Check c{name};
  const std::vector<unsigned> ss{2, 3, 4, 5, 6, 7, 8};
  const std::vector<std::size_t> ls{16, 64};
  auto grid = make_grid(v, ss, ls, ls, cfg.trials, cfg.seed);
  grid.resize(cfg.trials);
  const auto methods = applicable_methods(v, 2);
  for (const auto& o : run_trials_parallel(grid, methods)) {
    if (!o.error.empty()) {
      c.error(o.error);
      continue;
    }
    std::string first_error;
    for (const auto& m : o.methods) {
      if (!m.error.empty() && first_error.empty()) first_error = std::string(to_string(m.method)) + ": " + m.error;
    }
    if (first_error.empty()) {
      c.record(o.ok());
    } else {
      c.error(first_error);
    }
  }
  return c;
}

int cmd_selftest(const RunConfig& cfg) {
  std::vector<Check> checks = invariant_checks(cfg);
  if (cfg.trials > 0) {
    checks.push_back(sweep_check("su attacks", Variant::kSU, cfg));
    checks.push_back(sweep_check("kl attack", Variant::kKL, cfg));
  }
  bool ok = true;
  json arr = json::array();
  std::ostringstream text;
  for (const auto& c : checks) {
    ok = ok && c.failures == 0;
    arr.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"errors", c.errors}});
    text << (c.failures == 0 ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases, " << c.failures
         << " failures)\n";
    for (const auto& e : c.errors) text << "  " << e << "\n";
  }
  text << (ok ? "selftest passed\n" : "selftest failed\n");
  emit(cfg, render(cfg, json{{"checks", arr}, {"pass", ok}}, text.str()));
  return ok ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thompson's group F key exchange simulator and key-recovery attacks"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", cfg.output_path, "Write output to this file instead of stdout");
  app.add_option("--scale-limit", cfg.scale_limit, "Largest binary scale a dyadic number may have")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "OpenMP threads for trial sweeps")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Random seed");

  const auto add_params = [&](CLI::App* sub) {
    sub->add_option("--s", cfg.s, "Subgroup parameter s")->check(CLI::Range(1u, 4096u));
    sub->add_option("--w-length", cfg.w_length, "Letters in the public word w");
    sub->add_option("--key-length", cfg.key_length, "Generator letters per private element");
    sub->add_option("--variant", cfg.variant, "Protocol variant")->check(CLI::IsMember({"su", "kl"}));
    sub->add_option("--seed", cfg.seed, "Random seed");
  };

  CLI::App* exchange = app.add_subcommand("exchange", "Simulate one honest exchange and print the transcript");
  add_params(exchange);
  exchange->add_flag("--include-private", cfg.include_private, "Also write both parties' keys and the shared key");

  CLI::App* attack = app.add_subcommand("attack", "Recover the shared key from a transcript");
  attack->add_option("--transcript", cfg.transcript_path, "Transcript JSON file")->required();
  attack->add_option("--method", cfg.method, "Attack method")
      ->check(CLI::IsMember({"restriction", "transitivity", "word", "kl", "all"}));
  attack->add_option("--target", cfg.target, "Transitivity target party")->check(CLI::IsMember({"alice", "bob"}));

  CLI::App* bench = app.add_subcommand("bench-nf", "Time normal-form computation against word length");
  bench->add_option("--min-exp", cfg.min_exp, "Smallest length 2^k");
  bench->add_option("--max-exp", cfg.max_exp, "Largest length 2^k");
  bench->add_option("--repetitions", cfg.repetitions, "Samples per length")->check(CLI::PositiveNumber);
  bench->add_option("--quadratic-max-exp", cfg.quadratic_max_exp, "Largest length for the quadratic reference");
  bench->add_option("--algorithm", cfg.algorithm, "Normal-form routine")
      ->check(CLI::IsMember({"dc", "parallel"}));
  bench->add_option("--seed", cfg.seed, "Random seed");

  CLI::App* selftest = app.add_subcommand("selftest", "Run invariant checks and reduced attack sweeps");
  add_params(selftest);
  selftest->add_option("--trials", cfg.trials, "Trials per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (cfg.scale_limit) set_scale_limit(*cfg.scale_limit);
  if (cfg.threads) omp_set_num_threads(*cfg.threads);

  try {
    if (*exchange) return cmd_exchange(cfg);
    if (*attack) return cmd_attack(cfg);
    if (*bench) return cmd_bench_nf(cfg);
    if (*selftest) return cmd_selftest(cfg);
  } catch (const CaseMismatch& e) {
    return report_error("case_mismatch", e.what(), kInputError);
  } catch (const FormatError& e) {
    return report_error("format", e.what(), kInputError);
  } catch (const InputError& e) {
    return report_error("input", e.what(), kInputError);
  } catch (const AttackError& e) {
    return report_error("dishonest_transcript", e.what(), kVerificationFailure);
  } catch (const ScaleOverflow& e) {
    return report_error("scale_overflow", e.what(), kInputError);
  } catch (const std::invalid_argument& e) {
    return report_error("input", e.what(), kInputError);
  }
  return kOk;
}
