#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace dml {

using Cell = std::variant<std::int64_t, double, std::string, bool>;

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class Format { csv, json };

std::string to_string(Format format);
Format parse_format(const std::string& text);

/// Doubles as %.15g.
std::string format_cell(const Cell& cell);

/// Header line plus one line per row, RFC 4180 quoting.
std::string to_csv(const Table& table);
/// Array of flat objects keyed by the headers, doubles rounded to 15 digits.
std::string to_json(const Table& table);
std::string render(const Table& table, Format format);

/// Parses RFC 4180 text into a header row and string cells.
Table parse_csv(const std::string& text);

/// Writes the rendered table; throws std::runtime_error carrying the
/// system error text when the file cannot be written.
void export_table(const Table& table, const std::string& path, Format format);

}  // namespace dml
