#include <doctest.h>

#include "thompson/attack.hpp"
#include "thompson/convert.hpp"
#include "thompson/sweep.hpp"

using namespace thompson;

namespace {

// s=2, w=x0, Bob holds b2=x3, a2=x0 x1^-1, Alice's keys trivial.
Transcript worked_instance() {
  const PublicData pub(2, NormalForm::generator(0));
  const NormalForm a2 = NormalForm::parse("x0 x1^-1");
  const NormalForm b2 = NormalForm::generator(3);
  return {Variant::kSU, pub, pub.w(), su_round_bob(pub, b2, a2)};
}

Exchange exchange(Variant v, unsigned s, std::uint64_t seed, std::optional<Branch> branch = std::nullopt) {
  ExchangeParams p;
  p.variant = v;
  p.s = s;
  p.w_length = 48;
  p.key_length = 48;
  p.seed = seed;
  p.branch = branch;
  return run_exchange(p);
}

}  // namespace

TEST_CASE("restriction on the worked instance") {
  const Transcript t = worked_instance();
  CHECK(t.u2 == NormalForm({0, 0, 5}, {1}));
  const AttackResult r = attack_restriction(t);
  CHECK(r.branch == Branch::kAtOrBelow);
  CHECK(r.cracked_party == Party::kBob);
  CHECK(r.recovered.first == NormalForm::generator(3));
  CHECK(r.recovered.second == NormalForm::parse("x0 x1^-1"));
  CHECK(r.verification.all_true());
  const NormalForm a2 = NormalForm::parse("x0 x1^-1");
  CHECK(r.key == su_key_bob(t.pub, t.u1, NormalForm::generator(3), a2));
}

TEST_CASE("identity keys") {
  for (const auto& w : {NormalForm::generator(0), NormalForm::generator(0, true), NormalForm()}) {
    const PublicData pub(3, w);
    const Transcript su{Variant::kSU, pub, w, w};
    for (const auto& r : {attack_restriction(su), attack_transitivity(su, pub.branch() == Branch::kAtOrBelow
                                                                                 ? Party::kAlice
                                                                                 : Party::kBob),
                          attack_word_level(su)}) {
      CHECK(r.key.value == w);
      CHECK(r.verification.all_true());
    }
    const Transcript kl{Variant::kKL, pub, w, w};
    const AttackResult r = attack_kl(kl);
    CHECK(r.key.value == w);
    CHECK(r.verification.all_true());
  }
}

TEST_CASE("extract_as_part") {
  const auto split = extract_as_part(NormalForm::parse("x0 x5 x1^-1"), 2);
  REQUIRE(split.has_value());
  CHECK(split->first == NormalForm::parse("x0 x1^-1"));
  CHECK(split->second == NormalForm::generator(4));

  const auto empty = extract_as_part(NormalForm(), 2);
  REQUIRE(empty.has_value());
  CHECK(empty->first.is_identity());
  CHECK(empty->second.is_identity());

  const auto b_only = extract_as_part(NormalForm::generator(3), 2);
  REQUIRE(b_only.has_value());
  CHECK(b_only->first.is_identity());
  CHECK(b_only->second == NormalForm::generator(3));

  CHECK_FALSE(extract_as_part(NormalForm::generator(0), 2).has_value());

  Rng rng(21);
  for (unsigned s = 2; s <= 6; ++s) {
    for (int k = 0; k < 50; ++k) {
      const NormalForm a = sample_A(s, 1 + k, rng);
      const NormalForm b = sample_B(s, 1 + k, rng);
      const auto got = extract_as_part(nf_multiply(a, b), s);
      REQUIRE(got.has_value());
      CHECK(got->first == a);
      CHECK(got->second == b);
    }
  }
}

TEST_CASE("word-level on the worked instance") {
  const AttackResult r = attack_word_level(worked_instance());
  CHECK(r.cracked_party == Party::kBob);
  CHECK(r.recovered.first == NormalForm::generator(3));
  CHECK(r.recovered.second == NormalForm::parse("x0 x1^-1"));
  CHECK(r.verification.all_true());
  CHECK(r.key == attack_restriction(worked_instance()).key);
}

TEST_CASE("transitivity cancellation on the worked instance") {
  // Alice's side: w(phi) <= phi. Use non-trivial Alice keys.
  const PublicData pub(2, NormalForm::generator(0));
  const NormalForm a1 = NormalForm::parse("x0 x2^-1 x1 x0^-1");
  const NormalForm b1 = NormalForm::parse("x4 x3^-1 x3^-1");
  const Transcript t{Variant::kSU, pub, su_round_alice(pub, a1, b1), worked_instance().u2};
  const AttackResult r = attack_transitivity(t, Party::kAlice);
  REQUIRE(r.verification.cancellation.has_value());
  CHECK(*r.verification.cancellation);
  CHECK(pl_is_identity_on(word_to_pl(r.recovered.second), 0, phi(2)));
  CHECK(r.verification.all_true());
  CHECK(r.key == attack_restriction(t).key);
}

TEST_CASE("case and variant mismatches") {
  const Transcript t = worked_instance();
  CHECK_THROWS_AS(attack_transitivity(t, Party::kBob), CaseMismatch);
  CHECK_THROWS_AS(attack_kl(t), CaseMismatch);
  const Transcript kl{Variant::kKL, t.pub, t.u1, t.u2};
  CHECK_THROWS_AS(attack_restriction(kl), CaseMismatch);
  CHECK_THROWS_AS(attack_word_level(kl), CaseMismatch);
  const PublicData s1(1, NormalForm::generator(0));
  CHECK_THROWS_AS(attack_transitivity({Variant::kSU, s1, s1.w(), s1.w()}, Party::kAlice), CaseMismatch);
  CHECK_NOTHROW(attack_restriction({Variant::kSU, s1, s1.w(), s1.w()}));
}

TEST_CASE("dishonest transcripts are flagged") {
  const Transcript t = worked_instance();
  // x1 moves phi_2 under w^-1 u2 and no B_s A_s split exists
  const Transcript bad{Variant::kSU, t.pub, t.u1, nf_multiply(t.u2, NormalForm::generator(1))};
  bool flagged = false;
  try {
    flagged = !attack_restriction(bad).verification.all_true();
  } catch (const AttackError&) {
    flagged = true;
  }
  CHECK(flagged);
  CHECK_THROWS_AS(attack_word_level({Variant::kSU, t.pub, nf_multiply(t.u1, NormalForm::generator(0)),
                                     nf_multiply(t.u2, NormalForm::generator(1))}),
                  AttackError);
}

TEST_CASE("all methods recover the honest key on random instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const unsigned s = 2 + static_cast<unsigned>(seed % 5);
    const Exchange su = exchange(Variant::kSU, s, seed);
    const Transcript& t = su.transcript;
    const AttackResult r = attack_restriction(t);
    CHECK(r.key == su.key_alice);
    CHECK(r.verification.all_true());
    CHECK((r.cracked_party == Party::kBob ? r.recovered == std::pair{su.bob.first, su.bob.second}
                                          : r.recovered == std::pair{su.alice.first, su.alice.second}));
    const Party target = t.pub.branch() == Branch::kAtOrBelow ? Party::kAlice : Party::kBob;
    const AttackResult tr = attack_transitivity(t, target);
    CHECK(tr.key == su.key_alice);
    CHECK(tr.verification.all_true());
    const AttackResult wl = attack_word_level(t);
    CHECK(wl.key == su.key_alice);
    CHECK(wl.verification.all_true());

    const Exchange kl = exchange(Variant::kKL, s, seed);
    const AttackResult k = attack_kl(kl.transcript);
    CHECK(k.key == kl.key_alice);
    CHECK(k.verification.all_true());
  }
}

TEST_CASE("method names") {
  for (const Method m : {Method::kRestriction, Method::kTransitivity, Method::kWordLevel, Method::kKL}) {
    CHECK(parse_method(to_string(m)) == m);
  }
  CHECK_THROWS(parse_method("guess"));
}

TEST_CASE("parallel sweep matches serial reference") {
  const std::vector<unsigned> ss{2, 3, 5};
  const std::vector<std::size_t> ls{16, 64};
  for (const Variant v : {Variant::kSU, Variant::kKL}) {
    const auto grid = make_grid(v, ss, ls, ls, 24, 17);
    CHECK(grid.size() == 24);
    CHECK(grid[5].seed == trial_seed(17, 5));
    const auto methods = applicable_methods(v, 2);
    const auto par = run_trials_parallel(grid, methods);
    const auto ser = run_trials_serial(grid, methods);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      CHECK(par[i].ok());
      CHECK(par[i].branch == ser[i].branch);
      REQUIRE(par[i].methods.size() == ser[i].methods.size());
      for (std::size_t m = 0; m < par[i].methods.size(); ++m) CHECK(par[i].methods[m].key == ser[i].methods[m].key);
    }
    const auto sum = summarize(par);
    CHECK(sum.failures == 0);
    CHECK(sum.at_or_below + sum.above == sum.trials);
  }
}
