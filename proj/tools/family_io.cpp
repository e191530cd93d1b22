#include "family_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace turan::cli {

namespace {

double to_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw InputError("bad number '" + std::string(text) + "' for " + std::string(what));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<double> numbers(const nlohmann::json& j, std::string_view field) {
  if (!j.is_array()) throw InputError("'" + std::string(field) + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw InputError("'" + std::string(field) + "' must hold numbers only");
    out.push_back(v.get<double>());
  }
  return out;
}

double number(const nlohmann::json& j, std::string_view field) {
  if (!j.is_number()) throw InputError("'" + std::string(field) + "' must be a number");
  return j.get<double>();
}

// Parameter names for `name:key=value` per builtin, in positional order.
std::vector<std::string_view> builtin_param_names(std::string_view name) {
  if (name == "power-law") return {"c", "delta"};
  if (name == "geometric") return {"ratio", "scale"};
  if (name == "laguerre-normalized") return {"alpha"};
  return {};
}

FamilyArg parse_builtin(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  if (colon == std::string_view::npos) {
    return {make_builtin(name), std::string(name)};
  }
  const std::string_view rest = text.substr(colon + 1);
  std::vector<double> params;
  if (name == "table") {
    for (std::string_view part : split(rest, ',')) params.push_back(to_double(part, "table"));
    return {make_builtin(name, params), "table"};
  }
  const std::vector<std::string_view> keys = builtin_param_names(name);
  if (keys.empty()) {
    make_builtin(name);  // unknown names fail here
    throw InputError("family '" + std::string(name) + "' takes no parameters");
  }
  std::vector<double> values(keys.size(), std::nan(""));
  std::string label(name);
  label += '[';
  bool first = true;
  for (std::string_view part : split(rest, rest.find(';') != std::string_view::npos ? ';' : ',')) {
    const std::size_t eq = part.find('=');
    if (eq == std::string_view::npos) throw InputError("expected key=value, got '" + std::string(part) + "'");
    const std::string_view key = part.substr(0, eq);
    std::size_t slot = keys.size();
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (keys[i] == key) slot = i;
    }
    if (slot == keys.size()) {
      throw InputError("unknown parameter '" + std::string(key) + "' for " + std::string(name));
    }
    values[slot] = to_double(part.substr(eq + 1), key);
    if (!first) label += ';';
    first = false;
    label += part;
  }
  label += ']';
  // Unset trailing parameters keep the builtin defaults.
  const RecurrenceSpec defaults = make_builtin(name);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isnan(values[i])) continue;
    if (name == "power-law") values[i] = i == 0 ? defaults.params().c : defaults.params().delta;
    if (name == "geometric") values[i] = i == 0 ? defaults.params().ratio : defaults.params().c;
    if (name == "laguerre-normalized") values[i] = defaults.params().alpha;
  }
  return {make_builtin(name, values), label};
}

nlohmann::json read_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("family JSON does not parse: ") + e.what());
  }
}

}  // namespace

RecurrenceSpec parse_family_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("family JSON must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key != "form" && key != "kind" && key != "params" && key != "table" && key != "a" &&
        key != "b" && key != "c") {
      throw InputError("unknown family field '" + key + "'");
    }
  }
  const RecurrenceForm form = j.contains("form")
                                  ? parse_form(j.at("form").get_ref<const std::string&>())
                                  : RecurrenceForm::SymmetricMonic;
  const bool has_table = j.contains("table") || j.contains("c") || j.contains("b") ||
                         j.contains("a");
  FamilyKind kind = FamilyKind::Table;
  if (j.contains("kind")) {
    if (!j.at("kind").is_string()) throw InputError("'kind' must be a string");
    kind = parse_kind(j.at("kind").get_ref<const std::string&>());
  } else if (!has_table) {
    throw InputError("family JSON needs 'kind'");
  }

  if (kind == FamilyKind::Table) {
    if (j.contains("params")) throw InputError("table families take no 'params'");
    if (j.contains("table") && (j.contains("a") || j.contains("b") || j.contains("c"))) {
      throw InputError("give either 'table' or top-level a/b/c, not both");
    }
    const nlohmann::json& t = j.contains("table") ? j.at("table") : j;
    if (!t.is_object()) throw InputError("'table' must be an object");
    for (auto it = t.begin(); it != t.end(); ++it) {
      if (&t != &j && it.key() != "a" && it.key() != "b" && it.key() != "c") {
        throw InputError("unknown table field '" + it.key() + "'");
      }
    }
    if (!t.contains("c")) throw InputError("table needs 'c'");
    std::vector<double> a, b;
    if (t.contains("a")) a = numbers(t.at("a"), "a");
    if (t.contains("b")) b = numbers(t.at("b"), "b");
    return RecurrenceSpec::table(form, numbers(t.at("c"), "c"), std::move(b), std::move(a));
  }

  if (has_table) throw InputError("closed-form families take no table");
  FamilyParams p;
  if (j.contains("params")) {
    const nlohmann::json& params = j.at("params");
    if (!params.is_object()) throw InputError("'params' must be an object");
    for (auto it = params.begin(); it != params.end(); ++it) {
      const std::string& key = it.key();
      const double v = number(it.value(), key);
      if (key == "c") p.c = v;
      else if (key == "delta") p.delta = v;
      else if (key == "ratio") p.ratio = v;
      else if (key == "alpha") p.alpha = v;
      else if (key == "value") p.value = v;
      else if (key == "slope") p.slope = v;
      else if (key == "intercept") p.intercept = v;
      else if (key == "a") p.a = v;
      else if (key == "b_slope") p.b_slope = v;
      else if (key == "b_intercept") p.b_intercept = v;
      else throw InputError("unknown parameter '" + key + "'");
    }
  }
  return RecurrenceSpec::closed_form(form, kind, p);
}

FamilyArg parse_family(std::string_view text) {
  if (text.empty()) throw InputError("empty family argument");
  if (text.front() == '@') {
    const std::string path(text.substr(1));
    std::ifstream in(path);
    if (!in) throw InputError("cannot read family file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const RecurrenceSpec spec = parse_family_json(read_json(buf.str()));
    return {spec, spec.name()};
  }
  if (text.front() == '{') {
    const RecurrenceSpec spec = parse_family_json(read_json(text));
    return {spec, spec.name()};
  }
  return parse_builtin(text);
}

nlohmann::ordered_json describe_family(const RecurrenceSpec& spec) {
  nlohmann::ordered_json j;
  j["form"] = std::string(to_string(spec.form()));
  const FamilyParams& p = spec.params();
  switch (spec.kind()) {
    case FamilyKind::Table: {
      j["kind"] = "table";
      nlohmann::ordered_json t;
      if (!spec.table_a().empty()) t["a"] = spec.table_a();
      if (!spec.table_b().empty()) t["b"] = spec.table_b();
      t["c"] = spec.table_c();
      j["table"] = t;
      return j;
    }
    case FamilyKind::Composite:
      j["kind"] = "composite";
      return j;
    default:
      break;
  }
  j["kind"] = std::string(to_string(spec.kind()));
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  switch (spec.kind()) {
    case FamilyKind::Constant:
      params["value"] = p.value;
      break;
    case FamilyKind::Linear:
      params["slope"] = p.slope;
      params["intercept"] = p.intercept;
      break;
    case FamilyKind::PowerLaw:
      params["c"] = p.c;
      params["delta"] = p.delta;
      break;
    case FamilyKind::Geometric:
      params["c"] = p.c;
      params["ratio"] = p.ratio;
      break;
    default:
      break;
  }
  if (spec.form() == RecurrenceForm::GeneralMonic) params["a"] = p.a;
  if (spec.form() == RecurrenceForm::GeneralMonic || spec.form() == RecurrenceForm::HalfLine) {
    params["b_slope"] = p.b_slope;
    params["b_intercept"] = p.b_intercept;
  }
  if (spec.builtin() == Builtin::LaguerreNormalized) params["alpha"] = p.alpha;
  j["params"] = params;
  return j;
}

}  // namespace turan::cli
