#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zenosq/cli/config.hpp"

namespace zenosq::cli {

struct Column {
  std::string name;
  std::string unit;  // "omega_q", "1/omega_q" or empty for dimensionless
};

using Cell = std::variant<double, std::int64_t, std::string, bool>;

struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
};

// Header "name[unit]", one line per row, doubles at 17 significant digits,
// NaN as an empty field.
std::string render_csv(const Table& table);

// {"meta": {version, command, config, tolerances, columns}, "rows": [...]}.
std::string render_json(const Table& table, const RunConfig& config,
                        std::string_view command);

std::string render(const Table& table, const RunConfig& config,
                   std::string_view command, OutputFormat format);

// gnuplot script plotting columns y_columns against x_column of a CSV file.
std::string render_plot_script(const Table& table,
                               const std::filesystem::path& data_file,
                               std::size_t x_column,
                               const std::vector<std::size_t>& y_columns,
                               bool log_log);

// Writes render(...) to path; throws std::runtime_error on IO failure.
void export_results(const Table& table, const RunConfig& config,
                    std::string_view command, OutputFormat format,
                    const std::filesystem::path& path);

}  // namespace zenosq::cli
