#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "turan/families.hpp"

namespace turan::cli {

struct FamilyArg {
  RecurrenceSpec spec;
  std::string label;  // comma-free, used in CSV rows
};

/// Accepts a builtin name, `name:key=value;...`, `table:c0,c1,...`,
/// an inline JSON object, or `@path` to a JSON file.
FamilyArg parse_family(std::string_view text);

/// Family JSON:
///   {"form": "symmetric-monic" | "general-monic" | "unit-interval" | "half-line",
///    "kind": "constant" | "linear" | "power" | "geometric" | "table",
///    "params": {"c", "delta", "ratio", "alpha", "value", "slope", "intercept",
///               "a", "b_slope", "b_intercept"},
///    "table": {"a": [...], "b": [...], "c": [...]}}
/// Top-level "a", "b", "c" arrays are shorthand for the table fields.
/// Unknown fields are rejected.
RecurrenceSpec parse_family_json(const nlohmann::json& j);

/// Full expansion of a spec in the JSON schema above.
nlohmann::ordered_json describe_family(const RecurrenceSpec& spec);

}  // namespace turan::cli
