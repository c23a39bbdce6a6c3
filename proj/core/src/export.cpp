#include "dml/export.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "dml/error.hpp"
#include "json.hpp"

namespace dml {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != headers.size()) throw DomainError("table row width does not match header");
  rows.push_back(std::move(row));
}

std::string to_string(Format format) { return format == Format::csv ? "csv" : "json"; }

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw DomainError("unknown format '" + text + "'");
}

namespace {

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15g", v);
  return buffer;
}

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_double(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>) return v;
        else return std::to_string(v);
      },
      cell);
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.headers.size(); ++i) out += (i ? "," : "") + quote_csv(table.headers[i]);
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + quote_csv(format_cell(row[i]));
    out += "\n";
  }
  return out;
}

std::string to_json(const Table& table) {
  auto array = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              object[table.headers[i]] = std::isfinite(v) ? std::stod(format_double(v)) : v;
            } else {
              object[table.headers[i]] = v;
            }
          },
          row[i]);
    }
    array.push_back(std::move(object));
  }
  return array.dump(2) + "\n";
}

std::string render(const Table& table, Format format) {
  return format == Format::csv ? to_csv(table) : to_json(table);
}

Table parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool pending = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    pending = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      pending = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw DomainError("parse_csv: unterminated quoted field");
  if (pending) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  if (records.empty()) throw DomainError("parse_csv: no header row");
  Table table{records.front(), {}};
  for (std::size_t r = 1; r < records.size(); ++r) {
    std::vector<Cell> row(records[r].begin(), records[r].end());
    table.add_row(std::move(row));
  }
  return table;
}

void export_table(const Table& table, const std::string& path, Format format) {
  if (table.rows.empty()) throw DomainError("export: no rows to write");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path + ": " + std::strerror(errno));
  out << render(table, format);
  out.flush();
  if (!out) throw std::runtime_error(path + ": " + std::strerror(errno));
}

}  // namespace dml
