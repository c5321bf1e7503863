#include "supermod/io.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace supermod::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_strict(const std::string& text) {
  // nlohmann keeps the last of repeated keys; reject them instead.
  std::vector<std::set<std::string>> open;
  const json::parser_callback_t cb = [&open](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start: open.emplace_back(); break;
      case json::parse_event_t::object_end: open.pop_back(); break;
      case json::parse_event_t::key: {
        const auto key = parsed.get<std::string>();
        if (!open.back().insert(key).second) throw ParseError("duplicate key \"" + key + "\"");
        break;
      }
      default: break;
    }
    return true;
  };
  try {
    return json::parse(text, cb);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

SetFunction parse_set_function(const std::string& text) {
  const json doc = parse_strict(text);
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "variables" && key != "values") throw ParseError("unexpected top-level key \"" + key + "\"");
  }
  if (!doc.contains("variables") || !doc["variables"].is_array()) {
    throw ParseError("missing \"variables\" array");
  }
  if (!doc.contains("values") || !doc["values"].is_object()) throw ParseError("missing \"values\" object");

  std::vector<std::string> labels;
  for (const auto& v : doc["variables"]) {
    if (!v.is_string()) throw ParseError("variable labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  std::optional<VariableSet> vars;
  try {
    vars.emplace(labels);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("variables: ") + e.what());
  }

  std::vector<Rational> values(vars->power_size());
  std::vector<bool> seen(vars->power_size(), false);
  for (const auto& [key, value] : doc["values"].items()) {
    SubsetMask s;
    try {
      s = vars->parse_mask(key);
    } catch (const std::invalid_argument& e) {
      throw ParseError("values[\"" + key + "\"]: " + e.what());
    }
    if (seen[s.bits]) throw ParseError("values[\"" + key + "\"]: subset listed twice");
    seen[s.bits] = true;
    if (!value.is_string()) throw ParseError("values[\"" + key + "\"]: value must be a rational string");
    try {
      values[s.bits] = Rational::parse(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError("values[\"" + key + "\"]: " + e.what());
    }
  }
  for (std::uint32_t s = 0; s < seen.size(); ++s) {
    if (!seen[s]) throw ParseError("values: missing subset \"" + vars->key(SubsetMask(s)) + "\"");
  }
  return SetFunction(*vars, std::move(values));
}

namespace {

ordered_json document(const SetFunction& m) {
  ordered_json doc;
  doc["variables"] = m.vars().labels();
  ordered_json values = ordered_json::object();
  for (std::uint32_t s = 0; s < m.size(); ++s) {
    values[m.vars().key(SubsetMask(s))] = m[SubsetMask(s)].to_string();
  }
  doc["values"] = std::move(values);
  return doc;
}

}  // namespace

std::string serialize(const SetFunction& m) { return document(m).dump(2) + "\n"; }

SetFunction read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_set_function(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw std::runtime_error("error writing '" + path + "'");
}

std::string catalogue_json(const RayCatalogue& catalogue) {
  ordered_json doc;
  doc["n"] = catalogue.n;
  doc["generators"] = ordered_json::array();
  for (const auto& g : catalogue.generators) doc["generators"].push_back(document(g));
  doc["orbits"] = ordered_json::array();
  for (const auto& o : catalogue.orbits) {
    ordered_json entry;
    entry["representative"] = o.representative;
    entry["members"] = o.members;
    doc["orbits"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string catalogue_table(const RayCatalogue& catalogue) {
  std::ostringstream os;
  for (const auto& g : catalogue.generators) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i > 0) os << '\t';
      os << g.values()[i];
    }
    os << '\n';
  }
  return os.str();
}

std::string orbit_summary(const RayCatalogue& catalogue) {
  std::ostringstream os;
  os << "n=" << catalogue.n << " generators=" << catalogue.generators.size()
     << " orbits=" << catalogue.orbits.size() << '\n';
  for (const auto& o : catalogue.orbits) {
    os << "size=" << o.members.size() << '\t' << catalogue.generators[o.representative].to_delta_string() << '\n';
  }
  return os.str();
}

}  // namespace supermod::io
