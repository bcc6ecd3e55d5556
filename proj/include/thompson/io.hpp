#ifndef THOMPSON_IO_HPP
#define THOMPSON_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "thompson/attack.hpp"
#include "thompson/protocol.hpp"

namespace thompson {

/// Malformed document or field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrivateSection {
  KeyMaterial alice;
  KeyMaterial bob;
  SharedKey key;
};

/// {"public": {variant, s, w, u1, u2}, "private": {...}}; the private
/// section is written only when given.
nlohmann::json transcript_to_json(const Transcript& t, const std::optional<PrivateSection>& priv = std::nullopt);

/// Reads the public section only.
Transcript transcript_from_json(const nlohmann::json& doc);

/// Private section if present.
std::optional<PrivateSection> private_from_json(const nlohmann::json& doc);

/// When `honest` is given, the verification block gains key_matches_honest.
nlohmann::json attack_result_to_json(const AttackResult& r, const std::optional<SharedKey>& honest = std::nullopt);

}  // namespace thompson

#endif  // THOMPSON_IO_HPP
