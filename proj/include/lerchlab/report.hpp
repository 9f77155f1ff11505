#pragma once

#include <string>

#include "json.hpp"
#include "lerchlab/identities.hpp"

namespace lerchlab {

// Numbers are serialized as decimal strings at the requested digit count,
// never as binary floats, so reports stay precision-faithful.
nlohmann::json complex_json(const BigComplex& z, long digits);
nlohmann::json report_json(const IdentityReport& rep, long digits);

// {suite, config: {digits, precision_bits}, results: [...], summary:
// {total, passed, failed, elapsed_ms}}. The summary is derived from the
// "pass" field of each result; elapsed_ms is always emitted as 0 so output is
// byte-identical across runs.
nlohmann::json make_envelope(const std::string& suite, long digits, nlohmann::json results);

// JSON schema of the envelope above; field names and ordering are stable.
std::string report_schema();

}  // namespace lerchlab
