#ifndef THOMPSON_ATTACK_HPP
#define THOMPSON_ATTACK_HPP

#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "thompson/protocol.hpp"

namespace thompson {

enum class Method { kRestriction, kTransitivity, kWordLevel, kKL };

std::string_view to_string(Method m);
Method parse_method(std::string_view text);

/// The transcript cannot have come from an honest run.
class AttackError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested method does not apply to this transcript's branch or
/// variant.
class CaseMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Verification {
  /// Recovered pair lies in the subgroups the cracked party draws from.
  bool membership = false;
  /// The pair rebuilds the cracked party's transcript element exactly.
  bool reconstruction = false;
  /// Intermediate identity check of the method: b_sigma (transitivity) or
  /// the first recovered factor (kl) fixes the complementary interval
  /// pointwise.
  std::optional<bool> cancellation;
  /// Word-level only: every validated factorization gives the same key.
  std::optional<bool> candidates_agree;

  bool all_true() const {
    return membership && reconstruction && cancellation.value_or(true) && candidates_agree.value_or(true);
  }
};

struct AttackResult {
  Method method;
  Party cracked_party;
  Branch branch;
  /// Same order as the cracked party's KeyMaterial.
  std::pair<NormalForm, NormalForm> recovered;
  SharedKey key;
  Verification verification;
};

/// Restricts w^-1 u2 (or w^-1 u1) to one side of phi_s, where it agrees with
/// a private key exactly. Handles every w; ties go to Bob.
AttackResult attack_restriction(const Transcript& t);

/// Alice when w(phi_s) <= phi_s, Bob otherwise. Recovers some valid pair
/// by extending the private key's known piece. Needs s >= 2.
AttackResult attack_transitivity(const Transcript& t, Party target);

/// KL-variant attack: Bob's u2 = b1 w b2 when w(phi_s) <= phi_s, Alice's
/// u1 = a1 w a2 otherwise.
AttackResult attack_kl(const Transcript& t);

/// Splits z as a b with a in A_s and b having indices >= s+1, by reading the
/// longest prefix of positions satisfying the A_s criterion. nullopt when z
/// is not of that form.
std::optional<std::pair<NormalForm, NormalForm>> extract_as_part(const NormalForm& z, unsigned s);

/// Factorizes z1 = w u1^-1 and z2 = w^-1 u2 in normal form.
AttackResult attack_word_level(const Transcript& t);

}  // namespace thompson

#endif  // THOMPSON_ATTACK_HPP
