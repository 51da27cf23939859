#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace ucomp::cli {

enum class OutputFormat { csv, json };

using Cell = std::variant<std::int64_t, double, std::string>;

/// Named columns with one record per row; every row has one cell per column.
class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  /// Throws std::logic_error if the row width differs from the header.
  void add_row(std::vector<Cell> row);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// Shortest decimal form with at most 15 significant digits, independent of
/// the process locale.
std::string format_number(double value);

/// CSV: header line, then one line per record. JSON: array of objects keyed
/// by column name. Doubles are rounded to 15 significant digits in both.
void write_table(std::ostream& out, const Table& table, OutputFormat format);

}  // namespace ucomp::cli
