#pragma once

#include <string>

#include "json.hpp"

#include "gainv/rep.hpp"

namespace gainv {

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Serialization of field elements: plain integer for prime fields,
// little-endian coefficient array otherwise.
nlohmann::json fq_to_json(const Fq& x);
Fq fq_from_json(const Field& k, const nlohmann::json& j);

nlohmann::json upoly_to_json(const UPoly& f);
UPoly upoly_from_json(const Field& k, const nlohmann::json& j);

nlohmann::json mpoly_to_json(const MPoly& f);

// { "p": .., "field_degree": .., "modulus": [..]?, "n": .., "q": {"i,j": [..]} }
nlohmann::json rep_to_json(const Representation& rep);
Representation rep_from_json(const nlohmann::json& j);

Representation load_rep_file(const std::string& path);

}  // namespace gainv
