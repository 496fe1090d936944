#pragma once

#include <string>

#include <json.hpp>

#include "qglab/galg.hpp"

namespace qglab {

/// Matrix exchange format shared by the CLI and the R-matrix validators:
/// { rows, cols, parity:[...], level:[...], data:[[re,im],...] row-major }
/// plus optional keys op_parity, level_shift, headroom, leg_parity.
/// Round-trips bit-exactly.
nlohmann::json matrix_to_json(const GradedOperator& op);
GradedOperator matrix_from_json(const nlohmann::json& j);

void save_matrix(const std::string& path, const GradedOperator& op);
GradedOperator load_matrix(const std::string& path);

}  // namespace qglab
