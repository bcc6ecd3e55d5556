#include "thompson/sweep.hpp"

#include <algorithm>

#include <omp.h>

namespace thompson {

bool TrialOutcome::ok() const {
  return error.empty() && honest_keys_agree && methods_agree() &&
         std::all_of(methods.begin(), methods.end(), [](const MethodOutcome& m) { return m.ok(); });
}

bool TrialOutcome::methods_agree() const {
  const NormalForm* first = nullptr;
  for (const auto& m : methods) {
    if (!m.key) continue;
    if (first && *first != *m.key) return false;
    first = &*m.key;
  }
  return true;
}

std::vector<Method> applicable_methods(Variant v, unsigned s) {
  if (v == Variant::kKL) {
    if (s >= 2) return {Method::kKL};
    return {};
  }
  if (s >= 2) return {Method::kRestriction, Method::kTransitivity, Method::kWordLevel};
  return {Method::kRestriction, Method::kWordLevel};
}

namespace {

AttackResult dispatch(Method m, const Transcript& t) {
  switch (m) {
    case Method::kRestriction:
      return attack_restriction(t);
    case Method::kTransitivity:
      return attack_transitivity(t, t.pub.branch() == Branch::kAtOrBelow ? Party::kAlice : Party::kBob);
    case Method::kWordLevel:
      return attack_word_level(t);
    case Method::kKL:
      return attack_kl(t);
  }
  throw std::logic_error("unknown method");
}

}  // namespace

TrialOutcome run_trial(const ExchangeParams& params, std::span<const Method> methods) {
  TrialOutcome out;
  out.params = params;
  try {
    const Exchange ex = run_exchange(params);
    out.branch = ex.transcript.pub.branch();
    out.honest_keys_agree = ex.key_alice == ex.key_bob;
    for (const Method m : methods) {
      MethodOutcome mo;
      mo.method = m;
      try {
        const AttackResult r = dispatch(m, ex.transcript);
        mo.key_matches = r.key == ex.key_alice;
        mo.verified = r.verification.all_true();
        mo.cancellation = r.verification.cancellation;
        mo.key = r.key.value;
      } catch (const std::exception& e) {
        mo.error = e.what();
      }
      out.methods.push_back(std::move(mo));
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

std::vector<TrialOutcome> run_trials_serial(std::span<const ExchangeParams> trials, std::span<const Method> methods) {
  std::vector<TrialOutcome> out;
  out.reserve(trials.size());
  for (const auto& p : trials) out.push_back(run_trial(p, methods));
  return out;
}

std::vector<TrialOutcome> run_trials_parallel(std::span<const ExchangeParams> trials,
                                              std::span<const Method> methods) {
  std::vector<TrialOutcome> out(trials.size());
  const auto n = static_cast<std::int64_t>(trials.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = run_trial(trials[static_cast<std::size_t>(i)], methods);
  }
  return out;
}

std::vector<ExchangeParams> make_grid(Variant v, std::span<const unsigned> s_values,
                                      std::span<const std::size_t> w_lengths,
                                      std::span<const std::size_t> key_lengths, std::size_t min_trials,
                                      std::uint64_t seed, std::optional<Branch> branch) {
  std::vector<ExchangeParams> out;
  const std::size_t cell_count = s_values.size() * w_lengths.size() * key_lengths.size();
  if (cell_count == 0) return out;
  out.reserve(std::max(min_trials, cell_count));
  while (out.size() < min_trials || out.size() % cell_count != 0) {
    const std::size_t cell = out.size() % cell_count;
    ExchangeParams p;
    p.variant = v;
    p.s = s_values[cell % s_values.size()];
    p.w_length = w_lengths[(cell / s_values.size()) % w_lengths.size()];
    p.key_length = key_lengths[cell / (s_values.size() * w_lengths.size())];
    p.seed = trial_seed(seed, out.size());
    p.branch = branch;
    out.push_back(p);
  }
  return out;
}

SweepSummary summarize(std::span<const TrialOutcome> outcomes) {
  SweepSummary s;
  s.trials = outcomes.size();
  for (const auto& o : outcomes) {
    if (!o.ok()) ++s.failures;
    if (o.error.empty()) {
      ++(o.branch == Branch::kAtOrBelow ? s.at_or_below : s.above);
    }
  }
  return s;
}

}  // namespace thompson
