#include "output.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace ucomp::cli {

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw std::logic_error("Table: row width does not match header");
  }
  rows_.push_back(std::move(row));
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // drops the sign of -0
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(),
                                       value, std::chars_format::general, 15);
  if (ec != std::errc{}) {
    throw std::runtime_error("format_number: conversion failed");
  }
  return std::string(buf.data(), end);
}

namespace {

std::string csv_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_number(v);
        } else {
          return v;
        }
      },
      cell);
}

nlohmann::json json_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return format_number(v);
          const std::string text = format_number(v);
          double rounded = 0.0;
          std::from_chars(text.data(), text.data() + text.size(), rounded);
          return rounded;
        } else {
          return v;
        }
      },
      cell);
}

}  // namespace

void write_table(std::ostream& out, const Table& table, OutputFormat format) {
  if (format == OutputFormat::csv) {
    const auto& cols = table.columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out << (i ? "," : "") << cols[i];
    }
    out << '\n';
    for (const auto& row : table.rows()) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << csv_cell(row[i]);
      }
      out << '\n';
    }
    return;
  }

  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& row : table.rows()) {
    nlohmann::ordered_json record = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      record[table.columns()[i]] = json_cell(row[i]);
    }
    doc.push_back(std::move(record));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace ucomp::cli
