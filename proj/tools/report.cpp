#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "s1yamabe/version.hpp"

namespace s1yamabe::cli {

namespace {

Json number_or_string(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

void dump_into(const Json& j, int indent, std::string& out) {
  const std::string pad(indent, ' '), inner(indent + 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) { out += "{}"; return; }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(key).dump() + ": ";
        dump_into(value, indent + 2, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) { out += "[]"; return; }
      // Arrays of scalars stay on one line; tables would be unreadable otherwise.
      bool scalars = true;
      for (const auto& v : j) scalars = scalars && !v.is_structured();
      out += scalars ? "[" : "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += scalars ? ", " : ",\n";
        if (!scalars) out += inner;
        dump_into(j[i], indent + 2, out);
      }
      out += scalars ? "]" : "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: out += format_double(j.get<double>()); return;
    default: out += j.dump(); return;
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "\"nan\"" : (x > 0 ? "\"inf\"" : "\"-inf\"");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s = buf;
  // Keep floats recognizable as floats on re-parse.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, 0, out);
  out += "\n";
  return out;
}

Report::Report(std::string command, long long seed) {
  doc_["tool"] = "s1yamabe";
  doc_["version"] = std::string(kVersion);
  doc_["command"] = std::move(command);
  doc_["seed"] = seed;
  doc_["inputs"] = Json::object();
  doc_["quantities"] = Json::object();
}

void Report::set_input(const std::string& key, Json value) { doc_["inputs"][key] = std::move(value); }

void Report::add(const std::string& name, double value, double error_estimate, const std::string& route) {
  Json q;
  q["value"] = number_or_string(value);
  q["error_estimate"] = number_or_string(error_estimate);
  q["route"] = route;
  doc_["quantities"][name] = std::move(q);
}

void Report::add_exact(const std::string& name, double value, const std::string& route) {
  Json q;
  q["value"] = number_or_string(value);
  q["exact"] = true;
  q["route"] = route;
  doc_["quantities"][name] = std::move(q);
}

void Report::add_count(const std::string& name, long long value, const std::string& route) {
  Json q;
  q["value"] = value;
  q["exact"] = true;
  q["route"] = route;
  doc_["quantities"][name] = std::move(q);
}

void Report::add_label(const std::string& name, const std::string& value) {
  Json q;
  q["value"] = value;
  q["exact"] = true;
  doc_["quantities"][name] = std::move(q);
}

void Report::add_table(Table table) {
  Json t;
  Json cols = Json::array();
  Json data = Json::object();
  for (const Column& c : table.columns) {
    Json meta;
    meta["name"] = c.name;
    if (c.error_estimate) meta["error_estimate"] = number_or_string(*c.error_estimate);
    else meta["exact"] = true;
    meta["route"] = c.route;
    cols.push_back(std::move(meta));
    Json values = Json::array();
    for (double v : c.values) values.push_back(number_or_string(v));
    data[c.name] = std::move(values);
  }
  if (!table.flags.empty()) data["flag"] = table.flags;
  t["columns"] = std::move(cols);
  t["data"] = std::move(data);
  if (!doc_.contains("tables")) doc_["tables"] = Json::object();
  doc_["tables"][table.name] = std::move(t);
  tables_.push_back(std::move(table));
}

void Report::add_note(const std::string& note) {
  if (!doc_.contains("notes")) doc_["notes"] = Json::array();
  doc_["notes"].push_back(note);
}

std::string Report::text() const { return dump(doc_); }

std::string Report::csv() const {
  std::ostringstream out;
  if (tables_.empty()) {
    out << "name,value,error_estimate,exact,route\r\n";
    for (const auto& [name, q] : doc_["quantities"].items()) {
      const Json& v = q["value"];
      out << csv_field(name) << ',' << (v.is_number_float() ? format_double(v.get<double>()) : csv_field(v.is_string() ? v.get<std::string>() : v.dump()))
          << ',';
      if (q.contains("error_estimate") && q["error_estimate"].is_number())
        out << format_double(q["error_estimate"].get<double>());
      out << ',' << (q.contains("exact") ? "true" : "false") << ','
          << csv_field(q.contains("route") ? q["route"].get<std::string>() : "") << "\r\n";
    }
    return out.str();
  }
  const Table& t = tables_.front();
  for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << csv_field(t.columns[c].name);
  if (!t.flags.empty()) out << ",flag";
  out << "\r\n";
  const std::size_t rows = t.columns.empty() ? 0 : t.columns.front().values.size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      const double v = t.columns[c].values[r];
      std::string s = format_double(v);
      if (!std::isfinite(v)) s = s.substr(1, s.size() - 2);
      out << (c ? "," : "") << s;
    }
    if (!t.flags.empty()) out << ',' << csv_field(t.flags[r]);
    out << "\r\n";
  }
  return out.str();
}

}  // namespace s1yamabe::cli
