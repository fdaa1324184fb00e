#include "zenosq/cli/export.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zenosq::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return csv_field(v);
        }
      },
      cell);
}

Json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
        }
        return v;
      },
      cell);
}

std::string header_name(const Column& c) {
  return c.unit.empty() ? c.name : c.name + "[" + c.unit + "]";
}

}  // namespace

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(header_name(table.columns[i]));
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table, const RunConfig& config,
                        std::string_view command) {
  Json columns = Json::array();
  for (const Column& c : table.columns) {
    columns.push_back({{"name", c.name}, {"unit", c.unit}});
  }
  Json doc;
  doc["meta"] = {
      {"version", ZENOSQ_VERSION},
      {"command", std::string(command)},
      {"config", config_to_json(config)},
      {"tolerances",
       {{"rel_tol", config.quadrature.rel_tol},
        {"max_lobes", config.quadrature.max_lobes}}},
      {"columns", columns},
  };
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json record = Json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      record[table.columns[i].name] = cell_json(row[i]);
    }
    rows.push_back(std::move(record));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string render(const Table& table, const RunConfig& config,
                   std::string_view command, OutputFormat format) {
  return format == OutputFormat::kJson ? render_json(table, config, command)
                                       : render_csv(table);
}

std::string render_plot_script(const Table& table,
                               const std::filesystem::path& data_file,
                               std::size_t x_column,
                               const std::vector<std::size_t>& y_columns,
                               bool log_log) {
  std::ostringstream out;
  out << "# gnuplot script\n"
      << "set datafile separator ','\n"
      << "set key top left\n";
  if (log_log) out << "set logscale xy\n" << "set format y '10^{%L}'\n";
  out << "set xlabel '" << header_name(table.columns.at(x_column)) << "'\n";
  out << "plot ";
  for (std::size_t i = 0; i < y_columns.size(); ++i) {
    if (i) out << ", \\\n     ";
    out << "'" << data_file.generic_string() << "' using " << x_column + 1 << ":"
        << y_columns[i] + 1 << " skip 1 with linespoints title '"
        << table.columns.at(y_columns[i]).name << "'";
  }
  out << "\n";
  return out.str();
}

void export_results(const Table& table, const RunConfig& config,
                    std::string_view command, OutputFormat format,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << render(table, config, command, format);
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace zenosq::cli
