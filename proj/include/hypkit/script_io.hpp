#pragma once

// JSON form of construction scripts:
//   {"name": ..., "params": [{"name", "kind", "value", "certificate"?}],
//    "steps": [{"op", "args", "selector"?}],
//    "asserts": [{"predicate", "args", "tol"?}], "outputs": [...]}
// Point values are [u, v]; ideal values are a boundary angle; lengths and
// angles are plain numbers (radians).

#include <filesystem>
#include <string>

#include "hypkit/construction.hpp"

namespace hypkit {

/// Throws ScriptFormatError naming the offending location, e.g. "steps[3].args".
Script parse_script(const std::string& text);
Script load_script(const std::filesystem::path& path);

std::string dump_script(const Script& script);
void save_script(const std::filesystem::path& path, const Script& script);

}  // namespace hypkit
