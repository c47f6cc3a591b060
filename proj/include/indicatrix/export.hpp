#ifndef INDICATRIX_EXPORT_HPP
#define INDICATRIX_EXPORT_HPP

#include "indicatrix/scalar.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace indicatrix {

/// Rationals are written as "p/q" strings, reals in shortest round-trip form.
using Cell = std::variant<Rational, double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws InvalidInput when the row width differs from the header.
  void add(std::vector<Cell> row);
};

std::string cell_text(const Cell& cell);

/// RFC 4180: CRLF line ends, fields quoted when they hold ',', '"' or line breaks.
std::string to_csv(const Table& table);
/// Array of objects keyed by column name.
std::string to_json(const Table& table);

/// Inverse of to_csv, every field as text.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

/// Format from the extension (.csv or .json); throws InvalidInput otherwise
/// or when the path cannot be written.
void write_table(const Table& table, const std::filesystem::path& path);

}  // namespace indicatrix

#endif  // INDICATRIX_EXPORT_HPP
