#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gerbe/group.hpp"
#include "gerbe/rcoeff.hpp"

namespace gerbe {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Parse failures throw error(errc::invalid_input) whose message names the
// offending JSON path, e.g. "/H/table/3".

json load_json_file(const std::string& path);

// {"name": str, "order": n, "table": [[int]]}
// or {"name": str, "degree": k, "generators": [[int]]}
FiniteGroup parse_group(const json& j, const std::string& path);

// {"G": <group or file path>, "H": ..., "Q": ..., "iota": [int], "pi": [int]}
// Relative group paths resolve against base_dir.
Extension parse_extension(const json& j, const std::string& base_dir, const std::string& path);

// [[r, "p/q"], ...] with values as exact rational strings (or integers)
std::vector<Sample> parse_samples(const json& j, const std::string& path);

Rational parse_rational(const std::string& text, const std::string& path);
std::string rational_str(const Rational& v);

ordered_json group_to_json(const FiniteGroup& g);
ordered_json extension_to_json(const Extension& ext, const std::string& name);

}  // namespace gerbe
