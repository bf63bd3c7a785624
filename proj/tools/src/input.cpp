#include <pgate/error.hpp>
#include <pgate/expression.hpp>
#include <pgate_cli/input.hpp>

#include <json.hpp>

#include <set>

namespace pgate::cli {
namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const std::string& require_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError("'" + where + "' must be a string");
  return v.get_ref<const std::string&>();
}

// Expression strings live inside JSON values, so positions are reported
// relative to the string together with the key it came from.
template <class F>
auto in_field(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError("in '" + where + "': " + e.detail(), e.line(), e.column());
  }
}

std::string scalar_text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError("'" + where + "' must be a string or an integer");
}

}  // namespace

InputDocument parse_input(std::string_view text, std::string default_name) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    std::string what = e.what();
    const auto cut = what.find("parse error");
    throw ParseError("invalid JSON: " + (cut == std::string::npos ? what : what.substr(cut)),
                     line, column);
  }
  if (!doc.is_object()) throw ParseError("input document must be a JSON object");

  static const std::set<std::string> known = {
      "name",          "description",    "field",   "group",  "representation",
      "polynomial",    "delete_column",  "meridian_trace",     "expected"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) throw ParseError("unknown key '" + key + "'");
  }

  InputDocument out;
  out.name = doc.contains("name") ? require_string(doc["name"], "name") : default_name;

  if (doc.contains("field")) {
    const json& f = doc["field"];
    if (!f.is_object() || !f.contains("variable") || !f.contains("min_poly")) {
      throw ParseError("'field' must be an object with 'variable' and 'min_poly'");
    }
    out.field_variable = require_string(f["variable"], "field.variable");
    const std::string& m = require_string(f["min_poly"], "field.min_poly");
    out.field = in_field("field.min_poly", [&] { return parse_field(out.field_variable, m); });
  } else {
    out.field = NumberField::rationals();
    out.field_variable = "";
  }

  if (doc.contains("group")) {
    const std::string& g = require_string(doc["group"], "group");
    out.group = in_field("group", [&] { return parse_presentation(g); });
  }

  if (doc.contains("representation")) {
    if (!out.group) throw ValidationError("'representation' needs a 'group'");
    const json& r = doc["representation"];
    if (!r.is_object()) throw ParseError("'representation' must be an object");
    Representation rho{*out.group, {}, out.field};
    for (const auto& [key, value] : r.items()) {
      if (out.group->index_of(key) < 0) {
        throw ValidationError("representation names unknown generator '" + key + "'");
      }
    }
    for (const std::string& gen : out.group->generators) {
      if (!r.contains(gen)) {
        throw ValidationError("representation has no matrix for generator '" + gen + "'");
      }
      const json& m = r[gen];
      const std::string where = "representation." + gen;
      if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() ||
          m[0].size() != 2 || m[1].size() != 2) {
        throw ParseError("'" + where + "' must be a 2x2 array");
      }
      auto entry = [&](int i, int j) {
        const std::string w = where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
        const std::string s = scalar_text(m[i][j], w);
        return in_field(w, [&] { return parse_field_element(out.field, s); });
      };
      rho.images.push_back({entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)});
    }
    out.representation = std::move(rho);
  }

  if (doc.contains("polynomial")) {
    if (out.group) {
      throw ValidationError("give either 'polynomial' or 'group', not both");
    }
    const std::string& p = require_string(doc["polynomial"], "polynomial");
    out.polynomial = in_field("polynomial", [&] { return parse_polynomial(out.field, p); });
  }

  if (doc.contains("delete_column")) {
    if (!out.group) throw ValidationError("'delete_column' needs a 'group'");
    const std::string& c = require_string(doc["delete_column"], "delete_column");
    const int idx = out.group->index_of(c);
    if (idx < 0) throw ValidationError("'delete_column' names unknown generator '" + c + "'");
    out.delete_column = idx;
  }

  if (doc.contains("meridian_trace")) {
    const std::string s = scalar_text(doc["meridian_trace"], "meridian_trace");
    if (s == "2" || s == "+2") {
      out.meridian_trace = MeridianTrace::Plus;
    } else if (s == "-2") {
      out.meridian_trace = MeridianTrace::Minus;
    } else {
      throw ParseError("'meridian_trace' must be +2 or -2");
    }
  }

  if (doc.contains("expected")) {
    const json& e = doc["expected"];
    if (!e.is_object()) throw ParseError("'expected' must be an object");
    for (const auto& [key, value] : e.items()) {
      std::optional<std::string>* slot = key == "verdict"         ? &out.expected.verdict
                                         : key == "f"             ? &out.expected.f
                                         : key == "torsion"       ? &out.expected.torsion
                                         : key == "factorization" ? &out.expected.factorization
                                                                  : nullptr;
      if (!slot) throw ParseError("unknown key 'expected." + key + "'");
      *slot = require_string(value, "expected." + key);
    }
  }
  return out;
}

}  // namespace pgate::cli
