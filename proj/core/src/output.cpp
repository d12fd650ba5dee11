// SPDX-License-Identifier: Apache-2.0
#include "vlcpos/output.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "vlcpos/config.hpp"
#include "vlcpos/error.hpp"
#include "vlcpos/reference_data.hpp"

#ifndef VLCPOS_VERSION
#define VLCPOS_VERSION "0.0.0"
#endif

namespace vlcpos {

namespace {

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_number(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else {
          return v;
        }
      },
      cell);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv(const OutputTable& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(t.columns[i]);
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_field(cell_text(row[i]));
    }
    out << '\n';
  }
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          // Round through the fixed-digit text so JSON and CSV agree.
          return std::stod(format_number(v));
        } else {
          return v;
        }
      },
      cell);
}

void write_json(const OutputTable& t, std::ostream& out) {
  nlohmann::ordered_json j;
  j["name"] = t.name;
  j["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& cell : row) r.push_back(cell_json(cell));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  auto meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.metadata) meta[k] = v;
  j["metadata"] = std::move(meta);
  out << j.dump(2) << '\n';
}

void write_text(const OutputTable& t, std::ostream& out) {
  if (t.rows.size() == 1) {
    std::size_t width = 0;
    for (const auto& c : t.columns) width = std::max(width, c.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      out << t.columns[i] << ':'
          << std::string(width - t.columns[i].size() + 1, ' ')
          << cell_text(t.rows[0][i]) << '\n';
    }
    return;
  }
  std::vector<std::size_t> widths(t.columns.size());
  std::vector<std::vector<std::string>> text(t.rows.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) widths[i] = t.columns[i].size();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t i = 0; i < t.rows[r].size(); ++i) {
      text[r].push_back(cell_text(t.rows[r][i]));
      widths[i] = std::max(widths[i], text[r][i].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << "  ";
      out << cells[i];
      if (i + 1 < cells.size()) out << std::string(widths[i] - cells[i].size(), ' ');
    }
    out << '\n';
  };
  line(t.columns);
  for (const auto& r : text) line(r);
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

void OutputTable::check() const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != columns.size()) {
      throw Error(ErrorKind::ValidationError,
                  "table '" + name + "' row " + std::to_string(r + 1) +
                      " has " + std::to_string(rows[r].size()) +
                      " cells, header has " + std::to_string(columns.size()));
    }
  }
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "text") return Format::Text;
  throw Error(ErrorKind::UnsupportedFormat,
              "unsupported format '" + std::string(name) + "'");
}

std::string format_number(double value, int digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

std::size_t emit(const OutputTable& table, Format format, std::ostream& out) {
  table.check();
  std::ostringstream buf;
  switch (format) {
    case Format::Csv: write_csv(table, buf); break;
    case Format::Json: write_json(table, buf); break;
    case Format::Text: write_text(table, buf); break;
  }
  const std::string bytes = buf.str();
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::IoError, "write failed");
  return bytes.size();
}

std::size_t emit(const OutputTable& table, Format format,
                 const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorKind::IoError,
                "cannot open '" + destination.string() + "' for writing");
  }
  const std::size_t n = emit(table, format, out);
  out.flush();
  if (!out) {
    throw Error(ErrorKind::IoError, "write to '" + destination.string() + "' failed");
  }
  return n;
}

std::string_view tool_version() noexcept { return VLCPOS_VERSION; }

std::vector<std::pair<std::string, std::string>> run_metadata(
    const ScenarioConfig& config) {
  return {
      {"config_hash", config_hash(config)},
      {"tool_version", std::string(tool_version())},
      {"reference_dataset", std::string(reference::kDatasetVersion)},
      {"timestamp", utc_timestamp()},
  };
}

OutputTable position_sweep_table(const SweepResult& result) {
  OutputTable t;
  t.name = "position_sweep";
  t.columns = {"index", "actual_x", "actual_y", "est_x",
               "est_y", "slant_d",  "received_power", "error_m"};
  for (const auto& row : result.rows) {
    t.rows.push_back({static_cast<std::int64_t>(row.index), row.position.x,
                      row.position.y, row.estimate.estimated.x,
                      row.estimate.estimated.y, row.geometry.slant_distance,
                      row.channel.received_power,
                      row.estimate.positioning_error});
  }
  return t;
}

OutputTable power_sweep_table(const std::vector<PowerDistanceRow>& rows) {
  OutputTable t;
  t.name = "power_sweep";
  t.columns = {"transmit_power_w", "distance_m", "received_power_w"};
  for (const auto& r : rows) {
    t.rows.push_back({r.transmit_power, r.distance, r.received_power});
  }
  return t;
}

OutputTable angle_sweep_table(const std::vector<AngleDistanceRow>& rows) {
  OutputTable t;
  t.name = "angle_sweep";
  t.columns = {"elevation_deg", "distance_m", "received_power_w"};
  for (const auto& r : rows) {
    t.rows.push_back({r.elevation.value(), r.distance, r.received_power});
  }
  return t;
}

OutputTable estimate_table(const EstimateRecord& r) {
  OutputTable t;
  t.name = "estimate";
  t.columns = {"measured_power_w", "inverted_distance_m", "horizontal_distance_m",
               "incidence_deg",    "complementary_deg",   "supplementary_deg",
               "x_comp",           "x_supp",              "x_fused",
               "y_fused",          "est_x",               "est_y",
               "est_z",            "actual_x",            "actual_y",
               "actual_z",         "error_m",             "clipped"};
  t.rows.push_back({r.measured_power,
                    r.inverted_distance,
                    r.horizontal_distance,
                    r.angles.incidence.value(),
                    r.angles.complementary.value(),
                    r.angles.supplementary.value(),
                    r.offsets.x_comp,
                    r.offsets.x_supp,
                    r.offsets.x_fused,
                    r.offsets.y_fused,
                    r.estimated.x,
                    r.estimated.y,
                    r.estimated.z,
                    r.actual.x,
                    r.actual.y,
                    r.actual.z,
                    r.positioning_error,
                    std::string(r.clipped ? "yes" : "no")});
  return t;
}

OutputTable replication_table(const ReplicationReport& report) {
  OutputTable t;
  t.name = "replication";
  t.columns = {"id",       "check",   "published", "computed",
               "abs_diff", "verdict", "status",    "note"};
  for (const auto& c : report.checks) {
    t.rows.push_back({c.id, c.description, c.published, c.computed,
                      c.abs_diff(), std::string(to_string(c.verdict)),
                      std::string(c.passed ? "ok" : "regressed"), c.note});
  }
  return t;
}

std::string render_replication_text(const ReplicationReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << c.description << ' ' << format_number(c.computed, 4) << " vs paper "
        << format_number(c.published, 4) << ": " << to_string(c.verdict);
    if (!c.passed) out << " [REGRESSED]";
    out << "\n    gap " << format_number(c.abs_diff(), 4);
    if (c.verdict == Verdict::Reproduced) {
      out << " (tolerance " << format_number(c.tolerance, 4) << ")";
    }
    if (!c.note.empty()) out << "; " << c.note;
    out << '\n';
  }
  out << "assumptions:\n";
  for (const auto& a : report.assumptions) out << "  - " << a << '\n';
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                    [](const auto& c) { return !c.passed; });
  out << report.checks.size() << " checks, " << failed << " regressed\n";
  return out.str();
}

}  // namespace vlcpos
