#pragma once

#include <string>

#include "hoc/criteria.hpp"
#include "hoc/order.hpp"

namespace hoc {

/// Parse {"k": int, "nodes": [{"a": "r", "w": "r"}...], "domain": ["lo","hi"]?}.
/// Throws std::invalid_argument on malformed documents.
InequalityProblem parse_problem_json(const std::string& text);
std::string problem_to_json(const InequalityProblem& problem);

/// Parse {"values": ["7", "3", "2"]}.
Configuration parse_configuration_json(const std::string& text);

/// Verdict plus per-criterion outcomes, rationals as strings.
std::string verdict_to_json(const CriteriaReport& report, double elapsed_ms);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hoc
