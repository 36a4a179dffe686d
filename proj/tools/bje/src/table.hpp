#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bje::cli {

using Cell = std::variant<double, long long, std::string>;

/// A result table with provenance metadata, written as CSV or JSON.
struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_meta(std::string key, std::string value) { meta.emplace_back(std::move(key), std::move(value)); }
  void add_meta(std::string key, double value);
};

enum class Format { Csv, Json };

/// CSV: '#'-prefixed "key: value" lines, a header row, then rows with 17
/// significant digits. JSON: {"meta": {...}, "data": [{column: value}, ...]}.
void write_table(std::ostream& out, const Table& table, Format format);

std::string format_double(double x);

}  // namespace bje::cli
