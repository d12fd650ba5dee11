// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "vlcpos/config.hpp"
#include "vlcpos/error.hpp"
#include "vlcpos/output.hpp"
#include "vlcpos/replication.hpp"
#include "vlcpos/scenario.hpp"

namespace vlcpos::cli {

namespace {

struct CommonOptions {
  std::string config_path;
  std::string out_path;
  std::string format;
  std::optional<std::size_t> samples;
  unsigned threads = 0;
};

void add_common(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("--config", opts.config_path, "Scenario configuration file");
  cmd.add_option("--out", opts.out_path, "Write results to this file");
  cmd.add_option("--format", opts.format, "Output format: csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  cmd.add_option("--samples", opts.samples,
                 "Distance samples for the fixed-angle sweep")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  cmd.add_option("--threads", opts.threads,
                 "Worker threads (0 = hardware concurrency)");
}

ScenarioConfig resolve_config(const CommonOptions& opts) {
  ScenarioConfig config =
      opts.config_path.empty() ? default_config() : load_config(opts.config_path);
  if (opts.samples) {
    config.distance_samples = *opts.samples;
    validate(config);
  }
  return config;
}

Point3 parse_point(const std::string& text) {
  Point3 p;
  char tail = 0;
  if (std::sscanf(text.c_str(), " %lf , %lf , %lf %c", &p.x, &p.y, &p.z,
                  &tail) != 3) {
    throw Error(ErrorKind::ParseError,
                "expected x,y,z for --actual, got '" + text + "'");
  }
  return p;
}

void write(const std::string& bytes, const CommonOptions& opts,
           std::ostream& out) {
  if (opts.out_path.empty()) {
    out << bytes;
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << bytes) || !file.flush()) {
    throw Error(ErrorKind::IoError, "cannot write '" + opts.out_path + "'");
  }
}

void write_table(OutputTable table, const ScenarioConfig& config,
                 const CommonOptions& opts, Format fallback, std::ostream& out) {
  table.metadata = run_metadata(config);
  const Format format = opts.format.empty() ? fallback : parse_format(opts.format);
  std::ostringstream buf;
  emit(table, format, buf);
  write(buf.str(), opts, out);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Single-LED visible-light positioning simulator", "vlcpos"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  CommonOptions opts;
  auto* position = app.add_subcommand(
      "position-sweep", "Per-position channel, CSA estimate and error");
  auto* power = app.add_subcommand(
      "power-sweep", "Received power vs distance for each transmit power");
  auto* angle = app.add_subcommand(
      "angle-sweep", "Received power vs distance for fixed elevation angles");
  auto* estimate = app.add_subcommand(
      "estimate", "Estimate a PD position from one measured power");
  auto* replicate = app.add_subcommand(
      "replicate", "Grade computed values against the published results");
  for (auto* cmd : {position, power, angle, estimate, replicate}) {
    add_common(*cmd, opts);
  }
  double measured_power = 0.0;
  std::string actual_text;
  estimate->add_option("--power", measured_power, "Measured power in W")
      ->required();
  estimate->add_option("--actual", actual_text,
                       "True PD position x,y,z (default: pd.position)");

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1),
                                     args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << tool_version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: UsageError: " << msg << '\n';
    return kExitUsage;
  }

  try {
    const ScenarioConfig config = resolve_config(opts);
    const RunOptions run_opts{opts.threads};

    if (position->parsed()) {
      write_table(position_sweep_table(run_position_sweep(config, run_opts)),
                  config, opts, Format::Csv, out);
    } else if (power->parsed()) {
      write_table(power_sweep_table(run_power_distance_sweep(config, run_opts)),
                  config, opts, Format::Csv, out);
    } else if (angle->parsed()) {
      write_table(angle_sweep_table(run_angle_sweep(config, run_opts)), config,
                  opts, Format::Csv, out);
    } else if (estimate->parsed()) {
      const Point3 actual = actual_text.empty() ? config.pd_template.position
                                                : parse_point(actual_text);
      PdSpec pd = config.pd_template;
      pd.position = actual;
      const EstimateRecord record = estimate_position(
          measured_power, config.led, pd, actual, config.azimuth, config.room);
      write_table(estimate_table(record), config, opts, Format::Text, out);
    } else if (replicate->parsed()) {
      const ReplicationReport report = replication_report(config, run_opts);
      if (opts.format.empty() || opts.format == "text") {
        write(render_replication_text(report), opts, out);
      } else {
        write_table(replication_table(report), config, opts, Format::Csv, out);
      }
      return report.all_passed() ? kExitOk : kExitChecksFailed;
    }
  } catch (const Error& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << to_string(e.kind()) << ": " << msg << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace vlcpos::cli
