// SPDX-License-Identifier: Apache-2.0
#include "vlcpos/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "vlcpos/error.hpp"

namespace vlcpos {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::ValidationError, what);
}

// Runs body(i) for i in [0, n). Each index writes only its own output slot,
// so the assembled result does not depend on the thread count. The first
// exception (lowest index) is rethrown after all workers join.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> failures(n);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers) {
          try {
            body(i);
          } catch (...) {
            failures[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

std::string position_label(std::size_t index) {
  return "position " + std::to_string(index);
}

}  // namespace

ScenarioConfig default_config() {
  ScenarioConfig c;
  c.room = RoomSpec{5.0, 5.0, 3.0};
  c.led = LedSpec{};
  c.led.position = Point3{2.5, 2.5, 3.0};
  c.led.transmit_power = 15.0;
  c.led.half_power_angle = Degrees(60.0);
  c.pd_template = PdSpec{};
  c.pd_template.position = Point3{2.5, 2.5, 0.0};
  c.pd_positions = diagonal_positions(c.room, 10, Point3{2.5, 2.5, 0.0},
                                      Point3{0.07, 0.07, 0.0});
  c.transmit_powers = {8.0, 10.0, 12.0, 15.0};
  c.sweep_elevations = {Degrees(60.0), Degrees(70.0), Degrees(80.0),
                        Degrees(90.0)};
  c.azimuth = Degrees(225.0);
  c.distance_samples = 50;
  return c;
}

void validate(const ScenarioConfig& config) {
  const RoomSpec& room = config.room;
  if (!(room.width > 0.0 && room.length > 0.0 && room.height > 0.0))
    invalid("room dimensions must all be > 0");
  validate(config.led);
  validate(config.pd_template);
  if (!room.contains(config.led.position))
    invalid("led.position must lie inside the room");
  if (!room.on_floor(config.pd_template.position))
    invalid("pd.position must lie on the floor plane (z = 0) inside the room");
  if (config.pd_positions.empty()) invalid("sweep needs at least one position");
  for (std::size_t i = 0; i < config.pd_positions.size(); ++i) {
    if (!room.on_floor(config.pd_positions[i])) {
      invalid("sweep " + position_label(i + 1) +
              " must lie on the floor plane (z = 0) inside the room");
    }
  }
  if (!(config.led.position.z > 0.0))
    invalid("led.position must be above the floor");
  if (config.transmit_powers.empty()) invalid("sweep.transmit_powers is empty");
  if (config.sweep_elevations.empty()) invalid("sweep.elevations is empty");
  for (double p : config.transmit_powers) {
    if (!(p > 0.0) || !std::isfinite(p))
      invalid("sweep.transmit_powers entries must be > 0");
  }
  for (Degrees e : config.sweep_elevations) {
    if (!(e.value() > 0.0 && e.value() <= 90.0))
      invalid("sweep.elevations entries must lie in (0, 90] deg");
  }
  const double az = config.azimuth.value();
  if (!(az >= 0.0 && az < 360.0))
    invalid("sweep.azimuth must lie in [0, 360) deg");
  if (config.distance_samples < 2) invalid("sweep.samples must be >= 2");
}

std::vector<double> linspace(double first, double last, std::size_t count) {
  if (count < 2) {
    throw Error(ErrorKind::DomainError, "linspace needs at least 2 samples");
  }
  std::vector<double> out(count);
  const double steps = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = first + (last - first) * (static_cast<double>(i) / steps);
  }
  out.back() = last;
  return out;
}

SweepResult run_position_sweep(const ScenarioConfig& config,
                               RunOptions options) {
  const std::size_t n = config.pd_positions.size();
  SweepResult result;
  result.rows.resize(n);
  parallel_for(n, options.threads, [&](std::size_t i) {
    try {
      SweepRow& row = result.rows[i];
      row.index = i + 1;
      row.position = config.pd_positions[i];
      PdSpec pd = config.pd_template;
      pd.position = row.position;
      row.channel = received_power(config.led, pd);
      row.geometry = row.channel.geometry;
      row.estimate =
          estimate_position(row.channel.received_power, config.led, pd,
                            row.position, config.azimuth, config.room);
    } catch (const Error& e) {
      throw e.annotated(position_label(i + 1));
    }
  });

  if (n > 0) {
    std::vector<double> errors;
    errors.reserve(n);
    for (const auto& row : result.rows) {
      errors.push_back(row.estimate.positioning_error);
    }
    SweepSummary& s = result.summary;
    s.average_error = average_error(errors);
    s.min_error = *std::min_element(errors.begin(), errors.end());
    s.max_error = *std::max_element(errors.begin(), errors.end());
    auto [lo, hi] = std::minmax_element(
        result.rows.begin(), result.rows.end(), [](const auto& a, const auto& b) {
          return a.channel.received_power < b.channel.received_power;
        });
    s.min_power = lo->channel.received_power;
    s.max_power = hi->channel.received_power;
  }
  return result;
}

std::vector<PowerDistanceRow> run_power_distance_sweep(
    const ScenarioConfig& config, RunOptions options) {
  if (config.transmit_powers.empty()) {
    throw Error(ErrorKind::EmptyInput, "power sweep needs transmit powers");
  }
  if (config.pd_positions.empty()) {
    throw Error(ErrorKind::EmptyInput, "power sweep needs PD positions");
  }
  const std::size_t per_group = config.pd_positions.size();
  std::vector<PowerDistanceRow> rows(config.transmit_powers.size() * per_group);
  parallel_for(rows.size(), options.threads, [&](std::size_t k) {
    const std::size_t group = k / per_group;
    const std::size_t i = k % per_group;
    LedSpec led = config.led;
    led.transmit_power = config.transmit_powers[group];
    PdSpec pd = config.pd_template;
    pd.position = config.pd_positions[i];
    try {
      const ChannelSample s = received_power(led, pd);
      rows[k] = PowerDistanceRow{led.transmit_power,
                                 s.geometry.slant_distance, s.received_power};
    } catch (const Error& e) {
      throw e.annotated(position_label(i + 1));
    }
  });
  for (std::size_t g = 0; g < config.transmit_powers.size(); ++g) {
    auto first = rows.begin() + static_cast<std::ptrdiff_t>(g * per_group);
    std::stable_sort(first, first + static_cast<std::ptrdiff_t>(per_group),
                     [](const auto& a, const auto& b) {
                       return a.distance < b.distance;
                     });
  }
  return rows;
}

std::vector<AngleDistanceRow> run_angle_sweep(const ScenarioConfig& config,
                                              RunOptions options) {
  if (config.sweep_elevations.empty()) {
    throw Error(ErrorKind::EmptyInput, "angle sweep needs elevations");
  }
  for (Degrees e : config.sweep_elevations) {
    if (!(e.value() > 0.0 && e.value() <= 90.0)) {
      throw Error(ErrorKind::DomainError,
                  "elevation " + std::to_string(e.value()) +
                      " deg outside (0, 90]");
    }
  }
  if (config.pd_positions.empty()) {
    throw Error(ErrorKind::EmptyInput, "angle sweep needs PD positions");
  }
  double d_min = 0.0;
  double d_max = 0.0;
  for (std::size_t i = 0; i < config.pd_positions.size(); ++i) {
    const double d =
        link_geometry(config.led.position, config.pd_positions[i])
            .slant_distance;
    d_min = i == 0 ? d : std::min(d_min, d);
    d_max = i == 0 ? d : std::max(d_max, d);
  }
  const std::vector<double> grid =
      d_max > d_min ? linspace(d_min, d_max, config.distance_samples)
                    : std::vector<double>{d_min};
  const double m = config.led.lambertian_order();
  const std::size_t per_family = grid.size();
  std::vector<AngleDistanceRow> rows(config.sweep_elevations.size() *
                                     per_family);
  parallel_for(rows.size(), options.threads, [&](std::size_t k) {
    const Degrees elevation = config.sweep_elevations[k / per_family];
    const double d = grid[k % per_family];
    const Degrees normal = Degrees(90.0) - elevation;
    rows[k] = AngleDistanceRow{
        elevation, d,
        received_power_at(config.led.transmit_power, m, config.pd_template, d,
                          normal, normal)};
  });
  return rows;
}

}  // namespace vlcpos
