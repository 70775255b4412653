#pragma once

#include "json.hpp"

#include "mink/field.hpp"
#include "mink/lorentz.hpp"

namespace mink {

// Lossless JSON forms: every scalar is an exact-rational string, never a
// float. Tensors: {"rank": q, "entries": [[[indices...], "scalar"], ...]};
// fields: {"rank": q, "orientation": s, "modes": [{"k": [...], "coeff": tensor}]}.
nlohmann::json to_json(const ComplexRational& z);
nlohmann::json to_json(const AntisymTensor& t);
nlohmann::json to_json(const WaveCovector& k);
nlohmann::json to_json(const ExpField& f);

// All parsers throw ValidationError on malformed input.
ComplexRational complex_from_json(const nlohmann::json& j);
Rational rational_from_json(const nlohmann::json& j);
AntisymTensor tensor_from_json(const nlohmann::json& j);
WaveCovector wave_from_json(const nlohmann::json& j);
ExpField field_from_json(const nlohmann::json& j);

} // namespace mink
