#include <doctest.h>

#include "thompson/io.hpp"

using namespace thompson;
using nlohmann::json;

namespace {

Exchange sample_exchange(Variant v) {
  ExchangeParams p;
  p.variant = v;
  p.s = 3;
  p.w_length = 20;
  p.key_length = 20;
  p.seed = 9;
  return run_exchange(p);
}

}  // namespace

TEST_CASE("transcript round trip") {
  for (const Variant v : {Variant::kSU, Variant::kKL}) {
    const Exchange x = sample_exchange(v);
    const json pub_only = transcript_to_json(x.transcript);
    CHECK_FALSE(pub_only.contains("private"));
    const Transcript back = transcript_from_json(json::parse(pub_only.dump()));
    CHECK(back.variant == v);
    CHECK(back.pub.s() == 3);
    CHECK(back.pub.w() == x.transcript.pub.w());
    CHECK(back.u1 == x.transcript.u1);
    CHECK(back.u2 == x.transcript.u2);
    CHECK(transcript_to_json(back).dump() == pub_only.dump());

    const json full = transcript_to_json(x.transcript, PrivateSection{x.alice, x.bob, x.key_alice});
    const auto priv = private_from_json(json::parse(full.dump()));
    REQUIRE(priv.has_value());
    CHECK(priv->alice == x.alice);
    CHECK(priv->bob == x.bob);
    CHECK(priv->key == x.key_alice);
    CHECK_FALSE(private_from_json(pub_only).has_value());
  }
}

TEST_CASE("malformed transcripts") {
  const json good = transcript_to_json(sample_exchange(Variant::kSU).transcript);
  CHECK_THROWS_AS(transcript_from_json(json::object()), FormatError);
  json bad = good;
  bad["public"]["u2"] = "x1^-2";
  CHECK_THROWS_AS(transcript_from_json(bad), FormatError);
  bad = good;
  bad["public"]["s"] = 0;
  CHECK_THROWS_AS(transcript_from_json(bad), FormatError);
  bad = good;
  bad["public"]["variant"] = "rsa";
  CHECK_THROWS_AS(transcript_from_json(bad), FormatError);
  bad = good;
  bad["public"].erase("w");
  CHECK_THROWS_AS(transcript_from_json(bad), FormatError);
}

TEST_CASE("attack result document") {
  const Exchange x = sample_exchange(Variant::kSU);
  const AttackResult r = attack_restriction(x.transcript);
  const json doc = attack_result_to_json(r, x.key_alice);
  CHECK(doc["method"] == "restriction");
  CHECK(doc["recovered"].size() == 2);
  CHECK(doc["key"] == x.key_alice.value.to_string());
  CHECK(doc["verification"]["membership"] == true);
  CHECK(doc["verification"]["reconstruction"] == true);
  CHECK(doc["verification"]["key_matches_honest"] == true);
  CHECK_FALSE(attack_result_to_json(r).at("verification").contains("key_matches_honest"));
}
