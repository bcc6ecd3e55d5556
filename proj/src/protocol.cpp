#include "thompson/protocol.hpp"

namespace thompson {

std::string_view to_string(Variant v) { return v == Variant::kSU ? "su" : "kl"; }
std::string_view to_string(Party p) { return p == Party::kAlice ? "alice" : "bob"; }
std::string_view to_string(Branch b) { return b == Branch::kAtOrBelow ? "at-or-below" : "above"; }

Variant parse_variant(std::string_view text) {
  if (text == "su") return Variant::kSU;
  if (text == "kl") return Variant::kKL;
  throw std::invalid_argument("unknown variant '" + std::string(text) + "' (expected su or kl)");
}

PublicData::PublicData(unsigned s, NormalForm w)
    : s_(s), w_(std::move(w)), w_map_(word_to_pl(w_)), phi_(thompson::phi(s)) {
  if (s == 0) throw std::invalid_argument("subgroup parameter s must be positive");
  branch_ = w_map_.eval(phi_) <= phi_ ? Branch::kAtOrBelow : Branch::kAbove;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw MembershipError(what);
}

}  // namespace

void check_membership(const KeyMaterial& keys, unsigned s) {
  const bool su = keys.variant == Variant::kSU;
  if (keys.role == Party::kAlice) {
    require(in_A(keys.first, s), "Alice's first key is not in A_s");
    require(su ? in_B(keys.second, s) : in_A(keys.second, s),
            su ? "Alice's second key is not in B_s" : "Alice's second key is not in A_s");
  } else {
    require(in_B(keys.first, s), "Bob's first key is not in B_s");
    require(su ? in_A(keys.second, s) : in_B(keys.second, s),
            su ? "Bob's second key is not in A_s" : "Bob's second key is not in B_s");
  }
}

NormalForm su_round_alice(const PublicData& pub, const NormalForm& a1, const NormalForm& b1) {
  check_membership({Party::kAlice, Variant::kSU, a1, b1}, pub.s());
  return nf_product(a1, pub.w(), b1);
}

NormalForm su_round_bob(const PublicData& pub, const NormalForm& b2, const NormalForm& a2) {
  check_membership({Party::kBob, Variant::kSU, b2, a2}, pub.s());
  return nf_product(b2, pub.w(), a2);
}

SharedKey su_key_alice(const PublicData&, const NormalForm& u2, const NormalForm& a1, const NormalForm& b1) {
  return {nf_product(a1, u2, b1)};
}

SharedKey su_key_bob(const PublicData&, const NormalForm& u1, const NormalForm& b2, const NormalForm& a2) {
  return {nf_product(b2, u1, a2)};
}

NormalForm kl_round_alice(const PublicData& pub, const NormalForm& a1, const NormalForm& a2) {
  check_membership({Party::kAlice, Variant::kKL, a1, a2}, pub.s());
  return nf_product(a1, pub.w(), a2);
}

NormalForm kl_round_bob(const PublicData& pub, const NormalForm& b1, const NormalForm& b2) {
  check_membership({Party::kBob, Variant::kKL, b1, b2}, pub.s());
  return nf_product(b1, pub.w(), b2);
}

SharedKey kl_key_alice(const PublicData&, const NormalForm& u2, const NormalForm& a1, const NormalForm& a2) {
  return {nf_product(a1, u2, a2)};
}

SharedKey kl_key_bob(const PublicData&, const NormalForm& u1, const NormalForm& b1, const NormalForm& b2) {
  return {nf_product(b1, u1, b2)};
}

Word sample_public_word(std::size_t length, Rng& rng) {
  std::uniform_int_distribution<unsigned> pick(0, 3);
  Word w;
  w.reserve(length);
  for (std::size_t n = 0; n < length; ++n) {
    const unsigned r = pick(rng);
    w.push_back({static_cast<Index>(r / 2), (r & 1u) != 0});
  }
  return w;
}

namespace {

constexpr int kMaxBranchAttempts = 10000;

}  // namespace

Exchange run_exchange(const ExchangeParams& params) {
  if (params.s == 0) throw std::invalid_argument("subgroup parameter s must be positive");
  Rng rng(params.seed);
  std::optional<PublicData> pub;
  for (int attempt = 0;; ++attempt) {
    if (attempt == kMaxBranchAttempts) {
      throw std::runtime_error("could not draw a public word in branch " + std::string(to_string(*params.branch)));
    }
    pub.emplace(params.s, nf_from_word(sample_public_word(params.w_length, rng)));
    if (!params.branch || pub->branch() == *params.branch) break;
  }
  const unsigned s = params.s;
  const std::size_t len = params.key_length;

  if (params.variant == Variant::kSU) {
    NormalForm a1 = sample_A(s, len, rng);
    NormalForm b1 = sample_B(s, len, rng);
    NormalForm b2 = sample_B(s, len, rng);
    NormalForm a2 = sample_A(s, len, rng);
    NormalForm u1 = su_round_alice(*pub, a1, b1);
    NormalForm u2 = su_round_bob(*pub, b2, a2);
    SharedKey ka = su_key_alice(*pub, u2, a1, b1);
    SharedKey kb = su_key_bob(*pub, u1, b2, a2);
    return {Transcript{Variant::kSU, *pub, std::move(u1), std::move(u2)},
            {Party::kAlice, Variant::kSU, std::move(a1), std::move(b1)},
            {Party::kBob, Variant::kSU, std::move(b2), std::move(a2)},
            std::move(ka),
            std::move(kb)};
  }
  NormalForm a1 = sample_A(s, len, rng);
  NormalForm a2 = sample_A(s, len, rng);
  NormalForm b1 = sample_B(s, len, rng);
  NormalForm b2 = sample_B(s, len, rng);
  NormalForm u1 = kl_round_alice(*pub, a1, a2);
  NormalForm u2 = kl_round_bob(*pub, b1, b2);
  SharedKey ka = kl_key_alice(*pub, u2, a1, a2);
  SharedKey kb = kl_key_bob(*pub, u1, b1, b2);
  return {Transcript{Variant::kKL, *pub, std::move(u1), std::move(u2)},
          {Party::kAlice, Variant::kKL, std::move(a1), std::move(a2)},
          {Party::kBob, Variant::kKL, std::move(b1), std::move(b2)},
          std::move(ka),
          std::move(kb)};
}

}  // namespace thompson
