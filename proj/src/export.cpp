#include "indicatrix/export.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>

namespace indicatrix {

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw InvalidInput("row width does not match the header");
  rows.push_back(std::move(row));
}

std::string cell_text(const Cell& cell) {
  struct {
    std::string operator()(const Rational& r) const { return format_rational(r); }
    std::string operator()(double x) const { return format_real(x); }
    std::string operator()(std::int64_t n) const { return std::to_string(n); }
    std::string operator()(const std::string& s) const { return s; }
  } visit;
  return std::visit(visit, cell);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

nlohmann::ordered_json json_value(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    if (std::isfinite(*d)) return *d;
    return format_real(*d);
  }
  if (const auto* n = std::get_if<std::int64_t>(&cell)) return *n;
  return cell_text(cell);
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += csv_field(fields[i]);
    }
    out += "\r\n";
  };
  line(table.columns);
  for (const auto& row : table.rows) {
    std::vector<std::string> fields;
    fields.reserve(row.size());
    for (const auto& c : row) fields.push_back(cell_text(c));
    line(fields);
  }
  return out;
}

std::string to_json(const Table& table) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    auto o = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) o[table.columns[i]] = json_value(row[i]);
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
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
    any = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", text.size());
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_table(const Table& table, const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  std::string body;
  if (ext == ".csv")
    body = to_csv(table);
  else if (ext == ".json")
    body = to_json(table);
  else
    throw InvalidInput("output extension must be .csv or .json: " + path.string());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << body;
  if (!out) throw InvalidInput("write failed for " + path.string());
}

}  // namespace indicatrix
