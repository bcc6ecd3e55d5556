#include "thompson/timing.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace thompson {

Word random_word(std::size_t length, Index max_index, Rng& rng) {
  std::uniform_int_distribution<Index> idx(0, max_index);
  std::bernoulli_distribution inv(0.5);
  Word w(length);
  for (auto& l : w) {
    l.index = idx(rng);
    l.inverse = inv(rng);
  }
  return w;
}

namespace {

NormalForm run(NfAlgorithm algo, std::span<const Letter> w) {
  switch (algo) {
    case NfAlgorithm::kDivideConquer:
      return nf_from_word(w);
    case NfAlgorithm::kParallel:
      return nf_from_word_parallel(w);
    case NfAlgorithm::kQuadratic:
      return nf_from_word_quadratic(w);
  }
  return {};
}

}  // namespace

std::vector<NfTiming> time_nf(NfAlgorithm algo, std::span<const std::size_t> lengths, int repetitions,
                              std::uint64_t seed) {
  // Short inputs are repeated up to a fixed letter budget per sample so every
  // sample is well above timer resolution; lengths are visited round-robin so
  // background load hits all of them alike.
  constexpr std::size_t kBudget = std::size_t{1} << 18;
  Rng rng(seed);
  // a pool of distinct words per length, so short inputs are not served
  // from a hot cache
  std::vector<std::vector<Word>> pools;
  for (const std::size_t n : lengths) {
    const std::size_t batch = std::max<std::size_t>(1, kBudget / std::max<std::size_t>(n, 1));
    std::vector<Word> pool;
    for (std::size_t b = 0; b < batch; ++b) pool.push_back(random_word(n, 15, rng));
    pools.push_back(std::move(pool));
  }
  std::vector<std::vector<double>> samples(lengths.size());
  std::size_t sink = 0;
  for (int r = 0; r < std::max(repetitions, 1); ++r) {
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      const std::size_t batch = pools[i].size();
      const auto t0 = std::chrono::steady_clock::now();
      for (const Word& w : pools[i]) sink += run(algo, w).length();
      const auto t1 = std::chrono::steady_clock::now();
      samples[i].push_back(std::chrono::duration<double>(t1 - t0).count() / static_cast<double>(batch));
    }
  }
  std::vector<NfTiming> out;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    auto& v = samples[i];
    std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
    out.push_back({lengths[i], v[v.size() / 2]});
  }
  if (sink == std::size_t(-1)) out.clear();  // keeps results observable
  return out;
}

std::vector<double> growth_ratios(std::span<const NfTiming> timings) {
  std::vector<double> out;
  for (const auto& a : timings) {
    for (const auto& b : timings) {
      if (b.length == 4 * a.length) out.push_back(a.median_seconds > 0 ? b.median_seconds / a.median_seconds : 0.0);
    }
  }
  return out;
}

}  // namespace thompson
