#pragma once

#include <json.hpp>

#include "rotbraid/braid.hpp"
#include "rotbraid/certificate.hpp"
#include "rotbraid/classify.hpp"
#include "rotbraid/rotation.hpp"
#include "rotbraid/spherical.hpp"

namespace rotbraid {

// JSON forms of the external file formats. Parsers throw errc::parse_error
// on malformed input.

nlohmann::json braid_word_to_json(const BraidWord& w);
BraidWord braid_word_from_json(const nlohmann::json& j);

nlohmann::json path_to_json(const RotationPath& p);
RotationPath path_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json classification_report_to_json(const ClassificationReport& r);

nlohmann::json spherical_braid_to_json(const SphericalBraid& sb);

}  // namespace rotbraid
