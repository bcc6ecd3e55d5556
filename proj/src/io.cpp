#include "thompson/io.hpp"

namespace thompson {

using nlohmann::json;

namespace {

json keys_to_json(const KeyMaterial& k) {
  return {{"first", k.first.to_string()}, {"second", k.second.to_string()}};
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw FormatError(std::string("missing field '") + name + "'");
  }
  return obj.at(name);
}

NormalForm word_field(const json& obj, const char* name) {
  const json& v = field(obj, name);
  if (!v.is_string()) throw FormatError(std::string("field '") + name + "' must be a word string");
  try {
    return NormalForm::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("field '") + name + "': " + e.what());
  }
}

}  // namespace

json transcript_to_json(const Transcript& t, const std::optional<PrivateSection>& priv) {
  json doc;
  doc["public"] = {{"variant", std::string(to_string(t.variant))},
                   {"s", t.pub.s()},
                   {"w", t.pub.w().to_string()},
                   {"u1", t.u1.to_string()},
                   {"u2", t.u2.to_string()}};
  if (priv) {
    doc["private"] = {{"alice", keys_to_json(priv->alice)},
                      {"bob", keys_to_json(priv->bob)},
                      {"key", priv->key.value.to_string()}};
  }
  return doc;
}

Transcript transcript_from_json(const json& doc) {
  const json& pub = field(doc, "public");
  const json& variant = field(pub, "variant");
  const json& s = field(pub, "s");
  if (!variant.is_string()) throw FormatError("field 'variant' must be a string");
  if (!s.is_number_unsigned() || s.get<std::uint64_t>() == 0 || s.get<std::uint64_t>() > 4096) {
    throw FormatError("field 's' must be an integer in [1, 4096]");
  }
  Variant v{};
  try {
    v = parse_variant(variant.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return Transcript{v, PublicData(s.get<unsigned>(), word_field(pub, "w")), word_field(pub, "u1"),
                    word_field(pub, "u2")};
}

std::optional<PrivateSection> private_from_json(const json& doc) {
  if (!doc.contains("private")) return std::nullopt;
  const json& priv = doc.at("private");
  const Variant v = transcript_from_json(doc).variant;
  const json& alice = field(priv, "alice");
  const json& bob = field(priv, "bob");
  return PrivateSection{{Party::kAlice, v, word_field(alice, "first"), word_field(alice, "second")},
                        {Party::kBob, v, word_field(bob, "first"), word_field(bob, "second")},
                        {word_field(priv, "key")}};
}

json attack_result_to_json(const AttackResult& r, const std::optional<SharedKey>& honest) {
  json ver = {{"membership", r.verification.membership}, {"reconstruction", r.verification.reconstruction}};
  if (r.verification.cancellation) ver["cancellation"] = *r.verification.cancellation;
  if (r.verification.candidates_agree) ver["candidates_agree"] = *r.verification.candidates_agree;
  if (honest) ver["key_matches_honest"] = (r.key == *honest);
  return {{"method", std::string(to_string(r.method))},
          {"case_branch", std::string(to_string(r.branch))},
          {"cracked_party", std::string(to_string(r.cracked_party))},
          {"recovered", {r.recovered.first.to_string(), r.recovered.second.to_string()}},
          {"key", r.key.value.to_string()},
          {"verification", ver}};
}

}  // namespace thompson
