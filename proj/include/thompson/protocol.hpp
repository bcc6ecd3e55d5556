#ifndef THOMPSON_PROTOCOL_HPP
#define THOMPSON_PROTOCOL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "thompson/subgroups.hpp"

namespace thompson {

/// SU: u1 = a1 w b1, u2 = b2 w a2. KL: u1 = a1 w a2, u2 = b1 w b2.
enum class Variant { kSU, kKL };
enum class Party { kAlice, kBob };

/// Position of the graph of w relative to (phi_s, phi_s).
enum class Branch {
  kAtOrBelow,  // w(phi_s) <= phi_s
  kAbove,      // w(phi_s) >  phi_s
};

std::string_view to_string(Variant v);
std::string_view to_string(Party p);
std::string_view to_string(Branch b);
Variant parse_variant(std::string_view text);

/// A private key that violates its subgroup membership.
class MembershipError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PublicData {
 public:
  PublicData(unsigned s, NormalForm w);

  unsigned s() const noexcept { return s_; }
  const NormalForm& w() const noexcept { return w_; }
  const PLMap& w_map() const noexcept { return w_map_; }
  const Dyadic& phi() const noexcept { return phi_; }
  Branch branch() const noexcept { return branch_; }

 private:
  unsigned s_;
  NormalForm w_;
  PLMap w_map_;
  Dyadic phi_;
  Branch branch_;
};

/// SU/Alice: (a1 in A, b1 in B); SU/Bob: (b2 in B, a2 in A);
/// KL/Alice: (a1, a2) in A; KL/Bob: (b1, b2) in B.
struct KeyMaterial {
  Party role;
  Variant variant;
  NormalForm first;
  NormalForm second;

  friend bool operator==(const KeyMaterial&, const KeyMaterial&) = default;
};

/// Checks the subgroup invariants of the key pair; throws MembershipError.
void check_membership(const KeyMaterial& keys, unsigned s);

struct Transcript {
  Variant variant;
  PublicData pub;
  NormalForm u1;
  NormalForm u2;
};

struct SharedKey {
  NormalForm value;

  friend bool operator==(const SharedKey&, const SharedKey&) = default;
};

NormalForm su_round_alice(const PublicData& pub, const NormalForm& a1, const NormalForm& b1);
NormalForm su_round_bob(const PublicData& pub, const NormalForm& b2, const NormalForm& a2);
/// K_A = a1 u2 b1.
SharedKey su_key_alice(const PublicData& pub, const NormalForm& u2, const NormalForm& a1, const NormalForm& b1);
/// K_B = b2 u1 a2.
SharedKey su_key_bob(const PublicData& pub, const NormalForm& u1, const NormalForm& b2, const NormalForm& a2);

NormalForm kl_round_alice(const PublicData& pub, const NormalForm& a1, const NormalForm& a2);
NormalForm kl_round_bob(const PublicData& pub, const NormalForm& b1, const NormalForm& b2);
/// a1 u2 a2; equal to b1 u1 b2 because A and B commute elementwise.
SharedKey kl_key_alice(const PublicData& pub, const NormalForm& u2, const NormalForm& a1, const NormalForm& a2);
SharedKey kl_key_bob(const PublicData& pub, const NormalForm& u1, const NormalForm& b1, const NormalForm& b2);

struct ExchangeParams {
  Variant variant = Variant::kSU;
  unsigned s = 4;
  std::size_t w_length = 256;
  std::size_t key_length = 256;
  std::uint64_t seed = 0;
  /// When set, w is redrawn until it falls in this branch.
  std::optional<Branch> branch;
};

struct Exchange {
  Transcript transcript;
  KeyMaterial alice;
  KeyMaterial bob;
  SharedKey key_alice;
  SharedKey key_bob;
};

/// Uniform word over {x0, x1}^{+-1}.
Word sample_public_word(std::size_t length, Rng& rng);

/// Deterministic full simulation. w is drawn first, then Alice's keys, then
/// Bob's, each private element as a sample of key_length generator letters.
Exchange run_exchange(const ExchangeParams& params);

}  // namespace thompson

#endif  // THOMPSON_PROTOCOL_HPP
