#ifndef THOMPSON_SUBGROUPS_HPP
#define THOMPSON_SUBGROUPS_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "thompson/convert.hpp"
#include "thompson/plmap.hpp"
#include "thompson/words.hpp"

namespace thompson {

using Rng = std::mt19937_64;

/// Which of the two commuting subgroups.
enum class Subgroup { kA, kB };

/// Raised when a construction's arguments fall outside its domain.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// phi_s = 1 - 2^-(s+1): A_s acts on [0, phi_s], B_s on [phi_s, 1].
Dyadic phi(unsigned s);

Interval support_interval(Subgroup g, unsigned s);

/// x_0 x_1^-1, ..., x_0 x_s^-1.
std::vector<NormalForm> gens_A(unsigned s);
/// x_{s+1}, ..., x_{2s}.
std::vector<NormalForm> gens_B(unsigned s);

/// Word criterion: balanced normal form with i_k - k < s and j_k - k < s.
bool in_A(const NormalForm& g, unsigned s);
/// Support criterion: the map is the identity on [0, phi_s].
bool in_B(const NormalForm& g, unsigned s);
bool in_B(const PLMap& g, unsigned s);

/// Geometric membership in PL_2 of the subgroup's interval.
bool supported_in(const PLMap& g, Subgroup which, unsigned s);

/// Word of `length` letters drawn uniformly from the generators and their
/// inverses. Each A_s generator contributes its two letters.
Word sample_word(Subgroup which, unsigned s, std::size_t length, Rng& rng);
NormalForm sample_A(unsigned s, std::size_t length, Rng& rng);
NormalForm sample_B(unsigned s, std::size_t length, Rng& rng);

/// Element of A_s (s >= 2) sending t1 to t2, for t1, t2 in (0, phi_s).
NormalForm transitive_element_A(unsigned s, const Dyadic& t1, const Dyadic& t2);
/// Element of B_s sending t1 to t2, for t1, t2 in (phi_s, 1).
NormalForm transitive_element_B(unsigned s, const Dyadic& t1, const Dyadic& t2);

/// Completes a map known on part of the subgroup's interval [lo, hi] to an
/// element of the subgroup. `partial` must be defined on a subinterval that
/// shares an endpoint with [lo, hi] and fix that endpoint; the remaining
/// part is filled with pl_interval_homeo.
PLMap extend_partial(Subgroup which, unsigned s, const PiecewiseMap& partial);

/// partial known on [0, t0].
NormalForm extend_partial_A(unsigned s, const PiecewiseMap& partial, const Dyadic& t0);
/// partial known on [phi_s, t0].
NormalForm extend_partial_B(unsigned s, const PiecewiseMap& partial, const Dyadic& t0);

}  // namespace thompson

#endif  // THOMPSON_SUBGROUPS_HPP
