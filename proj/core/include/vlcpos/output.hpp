// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "vlcpos/estimator.hpp"
#include "vlcpos/replication.hpp"
#include "vlcpos/scenario.hpp"

namespace vlcpos {

using Cell = std::variant<double, std::int64_t, std::string>;

/// Named result table. Metadata (config hash, tool version, timestamp) is
/// carried alongside the data and never affects the data bytes.
struct OutputTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;

  /// Throws ValidationError when a row's arity differs from the header.
  void check() const;
};

enum class Format { Csv, Json, Text };

/// "csv", "json" or "text"; UnsupportedFormat otherwise.
Format parse_format(std::string_view name);

inline constexpr int kSignificantDigits = 6;

/// Fixed significant-digit rendering shared by every emitter. Negative zero
/// prints as "0"; non-finite values as "nan", "inf", "-inf".
std::string format_number(double value, int digits = kSignificantDigits);

/// CSV: header row first, comma delimiter, LF endings, '.' decimal point, no
/// metadata. JSON: {"name", "columns", "rows", "metadata"}. Text: aligned
/// columns. Returns bytes written.
std::size_t emit(const OutputTable& table, Format format, std::ostream& out);

/// Writes to a file (IoError on failure).
std::size_t emit(const OutputTable& table, Format format,
                 const std::filesystem::path& destination);

/// Standard metadata block for a run of `config`.
std::vector<std::pair<std::string, std::string>> run_metadata(
    const ScenarioConfig& config);

std::string_view tool_version() noexcept;

OutputTable position_sweep_table(const SweepResult& result);
OutputTable power_sweep_table(const std::vector<PowerDistanceRow>& rows);
OutputTable angle_sweep_table(const std::vector<AngleDistanceRow>& rows);
OutputTable estimate_table(const EstimateRecord& record);
OutputTable replication_table(const ReplicationReport& report);

/// One line per check: "<description> <computed> vs paper <published>:
/// <VERDICT>" plus the note and gap, followed by the assumptions.
std::string render_replication_text(const ReplicationReport& report);

}  // namespace vlcpos
