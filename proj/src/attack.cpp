#include "thompson/attack.hpp"

#include <string>

namespace thompson {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::kRestriction:
      return "restriction";
    case Method::kTransitivity:
      return "transitivity";
    case Method::kWordLevel:
      return "word";
    case Method::kKL:
      return "kl";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "restriction") return Method::kRestriction;
  if (text == "transitivity") return Method::kTransitivity;
  if (text == "word") return Method::kWordLevel;
  if (text == "kl") return Method::kKL;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

namespace {

void require_variant(const Transcript& t, Variant v, Method m) {
  if (t.variant != v) {
    throw CaseMismatch("method " + std::string(to_string(m)) + " needs a " + std::string(to_string(v)) +
                       " transcript");
  }
}

void require_transitive(const Transcript& t, Method m) {
  if (t.pub.s() < 2) {
    throw CaseMismatch("method " + std::string(to_string(m)) + " needs s >= 2");
  }
}

PLMap patch_or_fail(const PLMap& g, const Dyadic& d, Side keep) {
  try {
    return pl_patch(g, d, keep);
  } catch (const PatchError& e) {
    throw AttackError(std::string("transcript is not honest: ") + e.what());
  }
}

NormalForm extend_or_fail(Subgroup which, unsigned s, const PiecewiseMap& partial) {
  try {
    return pl_to_word(extend_partial(which, s, partial));
  } catch (const ConstructionError& e) {
    throw AttackError(std::string("transcript is not honest: ") + e.what());
  }
}

NormalForm transitive_or_fail(Subgroup which, unsigned s, const Dyadic& from, const Dyadic& to) {
  if (from == to) return {};
  try {
    return which == Subgroup::kA ? transitive_element_A(s, from, to) : transitive_element_B(s, from, to);
  } catch (const ConstructionError& e) {
    throw AttackError(std::string("transcript is not honest: ") + e.what());
  }
}

}  // namespace

AttackResult attack_restriction(const Transcript& t) {
  require_variant(t, Variant::kSU, Method::kRestriction);
  const PublicData& pub = t.pub;
  const unsigned s = pub.s();
  const NormalForm w_inv = nf_invert(pub.w());
  const PLMap w_inv_map = pl_invert(pub.w_map());

  if (pub.branch() == Branch::kAtOrBelow) {
    // w maps [0, phi] into [0, phi], so b2 acts trivially after w a2 there.
    const PLMap a2_map = patch_or_fail(pl_compose(w_inv_map, word_to_pl(t.u2)), pub.phi(), Side::kLeft);
    NormalForm a2 = pl_to_word(a2_map);
    NormalForm b2 = nf_product(t.u2, nf_invert(a2), w_inv);
    AttackResult r{Method::kRestriction, Party::kBob, pub.branch(), {b2, a2}, {nf_product(b2, t.u1, a2)}, {}};
    r.verification.membership = in_A(a2, s) && in_B(b2, s);
    r.verification.reconstruction = nf_product(b2, pub.w(), a2) == t.u2;
    return r;
  }
  // w^-1 u1 = w^-1 a1 w b1 agrees with b1 on [phi, 1].
  const PLMap b1_map = patch_or_fail(pl_compose(w_inv_map, word_to_pl(t.u1)), pub.phi(), Side::kRight);
  NormalForm b1 = pl_to_word(b1_map);
  NormalForm a1 = nf_product(t.u1, nf_invert(b1), w_inv);
  AttackResult r{Method::kRestriction, Party::kAlice, pub.branch(), {a1, b1}, {nf_product(a1, t.u2, b1)}, {}};
  r.verification.membership = in_A(a1, s) && in_B(b1, s);
  r.verification.reconstruction = nf_product(a1, pub.w(), b1) == t.u1;
  return r;
}

namespace {

struct SidePair {
  NormalForm a;
  NormalForm b;
  bool b_trivial_on_a_side;
};

// u = a w b with w(phi) <= phi: a is known on [0, w(phi)] as u w^-1; any
// extension into A_s gives a valid pair.
SidePair transitivity_core(unsigned s, const NormalForm& w, const PLMap& w_map, const NormalForm& u) {
  const Dyadic p = phi(s);
  const Dyadic t0 = w_map.eval(p);
  const PLMap known = pl_compose(word_to_pl(u), pl_invert(w_map));
  NormalForm a = extend_or_fail(Subgroup::kA, s, known.restrict({Dyadic(0), t0}));
  NormalForm b = nf_product(nf_invert(w), nf_invert(a), u);
  const bool trivial = pl_is_identity_on(word_to_pl(b), Dyadic(0), p);
  return {std::move(a), std::move(b), trivial};
}

}  // namespace

AttackResult attack_transitivity(const Transcript& t, Party target) {
  require_variant(t, Variant::kSU, Method::kTransitivity);
  require_transitive(t, Method::kTransitivity);
  const PublicData& pub = t.pub;
  const unsigned s = pub.s();
  const Party expected = pub.branch() == Branch::kAtOrBelow ? Party::kAlice : Party::kBob;
  if (target != expected) {
    throw CaseMismatch("transitivity attack on " + std::string(to_string(target)) + " does not apply when w is " +
                       std::string(to_string(pub.branch())) + " phi_s");
  }

  if (target == Party::kAlice) {
    SidePair sp = transitivity_core(s, pub.w(), pub.w_map(), t.u1);
    AttackResult r{Method::kTransitivity, Party::kAlice, pub.branch(), {sp.a, sp.b}, {nf_product(sp.a, t.u2, sp.b)},
                   {}};
    r.verification.membership = in_A(sp.a, s) && in_B(sp.b, s);
    r.verification.reconstruction = nf_product(sp.a, pub.w(), sp.b) == t.u1;
    r.verification.cancellation = sp.b_trivial_on_a_side;
    return r;
  }
  // u2^-1 = a2^-1 w^-1 b2^-1 has Alice's shape over w^-1, and w^-1(phi) < phi.
  const NormalForm w_inv = nf_invert(pub.w());
  SidePair sp = transitivity_core(s, w_inv, pl_invert(pub.w_map()), nf_invert(t.u2));
  NormalForm b2 = nf_invert(sp.b);
  NormalForm a2 = nf_invert(sp.a);
  AttackResult r{Method::kTransitivity, Party::kBob, pub.branch(), {b2, a2}, {nf_product(b2, t.u1, a2)}, {}};
  r.verification.membership = in_A(a2, s) && in_B(b2, s);
  r.verification.reconstruction = nf_product(b2, pub.w(), a2) == t.u2;
  r.verification.cancellation = sp.b_trivial_on_a_side;
  return r;
}

AttackResult attack_kl(const Transcript& t) {
  require_variant(t, Variant::kKL, Method::kKL);
  require_transitive(t, Method::kKL);
  const PublicData& pub = t.pub;
  const unsigned s = pub.s();
  const Dyadic& p = pub.phi();
  const PLMap w_inv_map = pl_invert(pub.w_map());
  const NormalForm w_inv = nf_invert(pub.w());
  const Dyadic anchor = w_inv_map.eval(p);  // w^-1(phi)

  if (pub.branch() == Branch::kAtOrBelow) {
    // Bob: u2 = b1 w b2. Move b2 so that it fixes w^-1(phi) >= phi.
    const Dyadic target = pl_invert(word_to_pl(t.u2)).eval(p);
    const NormalForm b0 = transitive_or_fail(Subgroup::kB, s, target, anchor);
    const NormalForm u2p = nf_multiply(t.u2, nf_invert(b0));
    NormalForm bs2;
    if (anchor != p) {
      // b1 is trivial on w b2'([0, anchor]) = [0, phi], so b2' = w^-1 u2' there.
      const PLMap known = pl_compose(w_inv_map, word_to_pl(u2p));
      bs2 = extend_or_fail(Subgroup::kB, s, known.restrict({p, anchor}));
    }
    NormalForm bs1 = nf_product(u2p, nf_invert(bs2), w_inv);
    NormalForm second = nf_multiply(bs2, b0);
    AttackResult r{Method::kKL, Party::kBob, pub.branch(), {bs1, second}, {nf_product(bs1, t.u1, second)}, {}};
    r.verification.cancellation = pl_is_identity_on(word_to_pl(bs1), Dyadic(0), p);
    r.verification.membership = in_B(bs1, s) && in_B(second, s);
    r.verification.reconstruction = nf_product(bs1, pub.w(), second) == t.u2;
    return r;
  }
  // Alice: u1 = a1 w a2, mirrored onto the A side with w^-1(phi) < phi.
  const Dyadic target = pl_invert(word_to_pl(t.u1)).eval(p);
  const NormalForm a0 = transitive_or_fail(Subgroup::kA, s, target, anchor);
  const NormalForm u1p = nf_multiply(t.u1, nf_invert(a0));
  const PLMap known = pl_compose(w_inv_map, word_to_pl(u1p));
  NormalForm as2 = extend_or_fail(Subgroup::kA, s, known.restrict({anchor, p}));
  NormalForm as1 = nf_product(u1p, nf_invert(as2), w_inv);
  NormalForm second = nf_multiply(as2, a0);
  AttackResult r{Method::kKL, Party::kAlice, pub.branch(), {as1, second}, {nf_product(as1, t.u2, second)}, {}};
  r.verification.cancellation = pl_is_identity_on(word_to_pl(as1), p, Dyadic(1));
  r.verification.membership = in_A(as1, s) && in_A(second, s);
  r.verification.reconstruction = nf_product(as1, pub.w(), second) == t.u1;
  return r;
}

std::optional<std::pair<NormalForm, NormalForm>> extract_as_part(const NormalForm& z, unsigned s) {
  const auto& pos = z.pos();
  const auto& neg = z.neg();
  const std::size_t cap = std::min(pos.size(), neg.size());
  std::size_t m = 0;
  while (m < cap && pos[m] < s + m + 1 && neg[m] < s + m + 1) ++m;

  std::vector<Index> bp;
  std::vector<Index> bn;
  for (std::size_t q = m; q < pos.size(); ++q) {
    if (pos[q] < m + s + 1) return std::nullopt;
    bp.push_back(static_cast<Index>(pos[q] - m));
  }
  for (std::size_t q = m; q < neg.size(); ++q) {
    if (neg[q] < m + s + 1) return std::nullopt;
    bn.push_back(static_cast<Index>(neg[q] - m));
  }
  try {
    NormalForm a(std::vector<Index>(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(m)),
                 std::vector<Index>(neg.begin(), neg.begin() + static_cast<std::ptrdiff_t>(m)));
    NormalForm b(std::move(bp), std::move(bn));
    if (!in_A(a, s) || nf_multiply(a, b) != z) return std::nullopt;
    return std::pair{std::move(a), std::move(b)};
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

AttackResult attack_word_level(const Transcript& t) {
  require_variant(t, Variant::kSU, Method::kWordLevel);
  const PublicData& pub = t.pub;
  const unsigned s = pub.s();
  const NormalForm& w = pub.w();
  const NormalForm w_inv = nf_invert(w);

  std::optional<AttackResult> bob;
  std::optional<AttackResult> alice;

  // z2 = w^-1 u2 = (w^-1 b2 w) a2.
  if (auto split = extract_as_part(nf_multiply(w_inv, t.u2), s)) {
    NormalForm a2 = std::move(split->first);
    NormalForm b2 = nf_product(w, split->second, w_inv);
    if (in_B(b2, s) && nf_product(b2, w, a2) == t.u2) {
      bob = AttackResult{Method::kWordLevel, Party::kBob, pub.branch(), {b2, a2}, {nf_product(b2, t.u1, a2)}, {}};
    }
  }
  // z1 = w u1^-1 = (w b1^-1 w^-1) a1^-1.
  if (auto split = extract_as_part(nf_multiply(w, nf_invert(t.u1)), s)) {
    NormalForm a1 = nf_invert(split->first);
    NormalForm b1 = nf_product(w_inv, nf_invert(split->second), w);
    if (in_B(b1, s) && nf_product(a1, w, b1) == t.u1) {
      alice = AttackResult{Method::kWordLevel, Party::kAlice, pub.branch(), {a1, b1}, {nf_product(a1, t.u2, b1)}, {}};
    }
  }
  if (!bob && !alice) {
    throw AttackError("transcript is not honest: neither w u1^-1 nor w^-1 u2 lies in A_s B_s");
  }
  AttackResult r = bob ? std::move(*bob) : std::move(*alice);
  r.verification.membership = true;  // both checked above
  r.verification.reconstruction = true;
  r.verification.candidates_agree = !(bob && alice) || r.key == alice->key;
  return r;
}

}  // namespace thompson
