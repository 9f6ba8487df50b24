#pragma once

#include <string>

#include <json.hpp>

#include "mukai/sarkisov.hpp"

namespace mukai::case_file {

/// Case files are JSON objects:
///
///   {
///     "genus": 8,
///     "sigma": {"d": 5, "pi": 1, "ksq": 5, "c2s": 7},
///     "f": {"d": 7, "pi": 4, "ksq": -2, "c2s": 14, "delta": 0},
///     "expected": {"m22": -5, "m13": -5, "m04": -3, "df": 7, "pif": 4, "nsing": 0}
///   }
///
/// Optional string fields "sigma_name" and "f_name" label the surfaces.
/// Every listed numeric field is required; unknown keys are rejected.
sarkisov::LinkCase from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const sarkisov::LinkCase& c);

sarkisov::LinkCase parse(const std::string& text);
sarkisov::LinkCase load(const std::string& path);
std::string serialize(const sarkisov::LinkCase& c);

}  // namespace mukai::case_file
