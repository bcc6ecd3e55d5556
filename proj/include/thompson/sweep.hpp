#ifndef THOMPSON_SWEEP_HPP
#define THOMPSON_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thompson/attack.hpp"

namespace thompson {

struct MethodOutcome {
  Method method;
  bool key_matches = false;
  bool verified = false;  // Verification::all_true()
  std::optional<bool> cancellation;
  std::optional<NormalForm> key;
  std::string error;

  bool ok() const { return error.empty() && key_matches && verified; }
};

struct TrialOutcome {
  ExchangeParams params;
  Branch branch = Branch::kAtOrBelow;
  bool honest_keys_agree = false;
  std::vector<MethodOutcome> methods;
  std::string error;

  bool ok() const;
  /// Every method that produced a key produced the same one.
  bool methods_agree() const;
};

/// Methods that apply to the variant and s; transitivity picks its target
/// from the branch.
std::vector<Method> applicable_methods(Variant v, unsigned s);

/// One honest exchange followed by the requested attacks, each compared
/// against the honest key. Exceptions are captured into the outcome.
TrialOutcome run_trial(const ExchangeParams& params, std::span<const Method> methods);

/// Reference: trials in order on the calling thread.
std::vector<TrialOutcome> run_trials_serial(std::span<const ExchangeParams> trials, std::span<const Method> methods);

/// Same outcomes, trials spread over OpenMP threads; results stay in trial
/// order.
std::vector<TrialOutcome> run_trials_parallel(std::span<const ExchangeParams> trials,
                                              std::span<const Method> methods);

/// Per-trial seed: base seed xor trial index.
inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) { return seed ^ static_cast<std::uint64_t>(trial); }

/// Cartesian sweep over s, w_length and key_length, repeated until at least
/// `min_trials` trials exist. Seeds are derived from `seed` by trial index.
std::vector<ExchangeParams> make_grid(Variant v, std::span<const unsigned> s_values,
                                      std::span<const std::size_t> w_lengths,
                                      std::span<const std::size_t> key_lengths, std::size_t min_trials,
                                      std::uint64_t seed, std::optional<Branch> branch = std::nullopt);

struct SweepSummary {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t at_or_below = 0;
  std::size_t above = 0;
};

SweepSummary summarize(std::span<const TrialOutcome> outcomes);

}  // namespace thompson

#endif  // THOMPSON_SWEEP_HPP
