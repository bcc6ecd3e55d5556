#ifndef THOMPSON_TIMING_HPP
#define THOMPSON_TIMING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "thompson/subgroups.hpp"
#include "thompson/words.hpp"

namespace thompson {

enum class NfAlgorithm { kDivideConquer, kParallel, kQuadratic };

/// Uniform word over x_0..x_{max_index} and inverses.
Word random_word(std::size_t length, Index max_index, Rng& rng);

struct NfTiming {
  std::size_t length = 0;
  double median_seconds = 0.0;
};

/// Median wall time per call of the chosen normal-form routine on a random
/// word of each length.
std::vector<NfTiming> time_nf(NfAlgorithm algo, std::span<const std::size_t> lengths, int repetitions,
                              std::uint64_t seed);

/// time(4n) / time(n) for every pair of lengths in the list that differ by
/// a factor of four.
std::vector<double> growth_ratios(std::span<const NfTiming> timings);

}  // namespace thompson

#endif  // THOMPSON_TIMING_HPP
