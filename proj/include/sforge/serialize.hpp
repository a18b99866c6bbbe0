#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sforge/families.hpp"
#include "sforge/ideals.hpp"
#include "sforge/verify.hpp"

namespace sforge {

/// {ring, generators: [lo, hi], degrees: [lo, hi]}
nlohmann::json to_json(const Ideal2& ideal);
/// {type, params: {...}, degrees: [lo, hi], aliases: [...]}
nlohmann::json to_json(const IdealClass& c);
nlohmann::json to_json(const TableRow& row);
nlohmann::json to_json(const FeasibilityVerdict& verdict);
nlohmann::json to_json(const CrossCheckReport& report);

/// Columns deg_lo, deg_hi, family, params, realizability, aliases. Parameters
/// are joined by ';' and aliases by '|', each alias written as family(params).
std::string table_csv(const std::vector<TableRow>& rows);

}  // namespace sforge
