#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "cdanalysis/algebra.hpp"
#include "cdanalysis/contour.hpp"
#include "cdanalysis/qcx.hpp"

namespace cd {

/// {"level": b, "coeffs": [w0, ...]}; doubles render with shortest
/// round-trip formatting.
nlohmann::json to_json(const CdNumber& z);
CdNumber cdnumber_from_json(const nlohmann::json& j);

/// (kind, coefficients, center, level, spherical); callables do not
/// serialize.
nlohmann::json to_json(const ExtensionSpec& spec);
ExtensionSpec extension_from_json(const nlohmann::json& j);

/// {"interp": "linear"|"arc", "closed": bool, "points": [{"t":..,
/// "coeffs":[..]}...], "center": [..] (arc only)}. Linear paths join control
/// points by segments; arc paths travel circularly about the given center.
Path path_from_json(const nlohmann::json& j);

/// key = value lines; '#' starts a comment.
std::map<std::string, std::string> parse_config(const std::string& text);

} // namespace cd
