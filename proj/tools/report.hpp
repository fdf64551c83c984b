#pragma once

#include <optional>
#include <string>
#include <vector>

#include "model.hpp"

namespace s1yamabe::cli {

/// One column of a report table; carries either an error estimate or the exact marker.
struct Column {
  std::string name;
  std::vector<double> values;
  std::optional<double> error_estimate;  ///< absent means exact
  std::string route;
};

struct Table {
  std::string name;
  std::vector<Column> columns;
  std::vector<std::string> flags;  ///< optional per-row labels, emitted as a string column
};

class Report {
 public:
  Report(std::string command, long long seed);

  void set_input(const std::string& key, Json value);
  void add(const std::string& name, double value, double error_estimate, const std::string& route);
  void add_exact(const std::string& name, double value, const std::string& route);
  void add_count(const std::string& name, long long value, const std::string& route);
  void add_label(const std::string& name, const std::string& value);
  void add_table(Table table);
  void add_note(const std::string& note);

  const Json& json() const { return doc_; }
  /// Report document with every float printed to 17 significant digits.
  std::string text() const;
  /// The first table as CSV (header line, one row per entry); when the report has no
  /// table, the scalar quantities as name,value,error_estimate,exact,route rows.
  std::string csv() const;

 private:
  Json doc_;
  std::vector<Table> tables_;
};

/// JSON text with %.17g floats and two-space indentation. Non-finite floats are
/// written as the strings "inf", "-inf", "nan".
std::string dump(const Json& j);

std::string format_double(double x);

}  // namespace s1yamabe::cli
