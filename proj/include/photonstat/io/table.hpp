#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace photonstat::io {

using Cell = std::variant<std::int64_t, double, std::string>;

/// Homogeneous rows under a header; numeric cells render with 6 significant
/// digits.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

std::string to_csv(const Table& table);

/// Writes RFC-style CSV with a header row.
void export_table(const Table& table, const std::filesystem::path& path);

}  // namespace photonstat::io
