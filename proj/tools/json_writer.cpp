#include "json_writer.hpp"

#include <cmath>
#include <cstdio>

namespace turan::cli {

namespace {

void indent(std::ostream& os, int depth) {
  for (int i = 0; i < depth; ++i) os << "  ";
}

void write_value(std::ostream& os, const nlohmann::ordered_json& v, int depth) {
  switch (v.type()) {
    case nlohmann::ordered_json::value_t::object: {
      if (v.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        indent(os, depth + 1);
        os << nlohmann::ordered_json(it.key()).dump() << ": ";
        write_value(os, it.value(), depth + 1);
      }
      os << "\n";
      indent(os, depth);
      os << "}";
      return;
    }
    case nlohmann::ordered_json::value_t::array: {
      if (v.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) os << ",\n";
        indent(os, depth + 1);
        write_value(os, v[i], depth + 1);
      }
      os << "\n";
      indent(os, depth);
      os << "]";
      return;
    }
    case nlohmann::ordered_json::value_t::number_float: {
      const double d = v.get<double>();
      if (std::isfinite(d)) {
        os << format_number(d);
      } else {
        os << "null";
      }
      return;
    }
    default:
      os << v.dump();
      return;
  }
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_json(std::ostream& os, const nlohmann::ordered_json& value) {
  write_value(os, value, 0);
  os << "\n";
}

}  // namespace turan::cli
