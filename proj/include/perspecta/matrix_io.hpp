#pragma once

#include <filesystem>

#include <json.hpp>

#include "perspecta/matrix_core.hpp"

namespace perspecta {

/// Matrix JSON format: {"dim": n, "complex": true|false, "data": [...]},
/// data row-major of length n*n; complex entries are [re, im] pairs, real
/// matrices use plain numbers.
nlohmann::json matrix_to_json(const HermitianMatrix& m);

/// Throws ParseError on malformed documents, length mismatches, non-finite
/// entries, or hermiticity violations (reported with the max asymmetry).
HermitianMatrix matrix_from_json(const nlohmann::json& j);

HermitianMatrix load_matrix(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const HermitianMatrix& m);

}  // namespace perspecta
