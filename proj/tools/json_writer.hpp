#pragma once

#include <ostream>
#include <string>

#include "json.hpp"

namespace turan::cli {

/// %.17g, the shortest fixed width that round-trips every binary64 value.
std::string format_number(double v);

/// Pretty JSON with numbers in format_number(); NaN and infinities become null.
void write_json(std::ostream& os, const nlohmann::ordered_json& value);

}  // namespace turan::cli
