// SPDX-License-Identifier: Apache-2.0
#include "vlcpos/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <variant>
#include <vector>

#include "vlcpos/error.hpp"

namespace vlcpos {

namespace {

using Item = std::variant<double, Point3>;

struct Value {
  std::vector<Item> items;
  std::size_t line = 0;
  std::size_t column = 0;
};

// Cursor over one value string; columns are reported relative to the line.
class ValueParser {
 public:
  ValueParser(std::string_view text, std::size_t line, std::size_t base_column)
      : text_(text), line_(line), base_(base_column) {}

  std::vector<Item> parse_list() {
    std::vector<Item> items;
    skip_ws();
    if (at_end()) fail("missing value");
    while (true) {
      skip_ws();
      if (peek() == '(') {
        items.emplace_back(parse_point());
      } else {
        items.emplace_back(parse_number());
      }
      skip_ws();
      if (at_end()) break;
      if (peek() != ',') fail("expected ',' between values");
      ++pos_;
    }
    return items;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, base_ + pos_, what);
  }

  double parse_number() {
    skip_ws();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (first != last && *first == '+') ++first;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  Point3 parse_point() {
    ++pos_;  // '('
    double c[3];
    for (int i = 0; i < 3; ++i) {
      c[i] = parse_number();
      skip_ws();
      const char want = i < 2 ? ',' : ')';
      if (peek() != want) fail(std::string("expected '") + want + "' in point");
      ++pos_;
    }
    return Point3{c[0], c[1], c[2]};
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

const std::set<std::string, std::less<>> kKnownKeys = {
    "room.width",        "room.length",        "room.height",
    "led.position",      "led.transmit_power", "led.half_power_angle",
    "led.lambertian_order",
    "pd.position",       "pd.area",            "pd.area_mm2",
    "pd.fov",            "pd.filter_gain",     "pd.refractive_index",
    "sweep.count",       "sweep.start",        "sweep.end",
    "sweep.positions",   "sweep.transmit_powers",
    "sweep.elevations",  "sweep.azimuth",      "sweep.samples",
};

const std::set<std::string, std::less<>> kSections = {"room", "led", "pd",
                                                      "sweep"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

class Entries {
 public:
  void add(std::string key, Value value) {
    if (values_.count(key)) {
      throw ParseError(value.line, 0, "duplicate key '" + key + "'");
    }
    values_.emplace(std::move(key), std::move(value));
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::optional<double> scalar(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    const Value& v = it->second;
    if (v.items.size() != 1 || !std::holds_alternative<double>(v.items[0])) {
      throw ParseError(v.line, v.column, "'" + key + "' expects one number");
    }
    return std::get<double>(v.items[0]);
  }

  std::optional<std::size_t> count(const std::string& key) const {
    auto s = scalar(key);
    if (!s) return std::nullopt;
    if (*s < 0.0 || *s != static_cast<double>(static_cast<std::uint64_t>(*s))) {
      const Value& v = values_.at(key);
      throw ParseError(v.line, v.column,
                       "'" + key + "' expects a non-negative integer");
    }
    return static_cast<std::size_t>(*s);
  }

  std::optional<Point3> point(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    const Value& v = it->second;
    if (v.items.size() != 1 || !std::holds_alternative<Point3>(v.items[0])) {
      throw ParseError(v.line, v.column,
                       "'" + key + "' expects one (x, y, z) point");
    }
    return std::get<Point3>(v.items[0]);
  }

  std::optional<std::vector<double>> numbers(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    std::vector<double> out;
    for (const Item& item : it->second.items) {
      if (!std::holds_alternative<double>(item)) {
        throw ParseError(it->second.line, it->second.column,
                         "'" + key + "' expects a list of numbers");
      }
      out.push_back(std::get<double>(item));
    }
    return out;
  }

  std::optional<std::vector<Point3>> points(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    std::vector<Point3> out;
    for (const Item& item : it->second.items) {
      if (!std::holds_alternative<Point3>(item)) {
        throw ParseError(it->second.line, it->second.column,
                         "'" + key + "' expects a list of (x, y, z) points");
      }
      out.push_back(std::get<Point3>(item));
    }
    return out;
  }

 private:
  std::map<std::string, Value, std::less<>> values_;
};

Entries tokenize(std::string_view text) {
  Entries entries;
  std::string section;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError(line_no, 0, "unterminated section header");
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (!kSections.count(section)) {
        throw ParseError(line_no, 0, "unknown section [" + section + "]");
      }
      continue;
    }

    const std::size_t eq = raw.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_no, 0, "expected 'key = value'");
    }
    std::string key(trim(raw.substr(0, eq)));
    if (key.empty()) throw ParseError(line_no, 1, "missing key");
    if (key.find('.') == std::string::npos) {
      if (section.empty()) {
        throw ParseError(line_no, 1,
                         "key '" + key + "' outside a section must be "
                         "qualified (e.g. led." + key + ")");
      }
      key = section + "." + key;
    }
    if (!kKnownKeys.count(key)) {
      throw ParseError(line_no, 1, "unknown key '" + key + "'");
    }
    Value value;
    value.line = line_no;
    value.column = eq + 2;
    ValueParser parser(raw.substr(eq + 1), line_no, eq + 2);
    value.items = parser.parse_list();
    entries.add(std::move(key), std::move(value));
  }
  return entries;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string point(const Point3& p) {
  return "(" + num(p.x) + ", " + num(p.y) + ", " + num(p.z) + ")";
}

}  // namespace

ScenarioConfig parse_config(std::string_view text) {
  const Entries e = tokenize(text);
  ScenarioConfig c = default_config();

  if (auto v = e.scalar("room.width")) c.room.width = *v;
  if (auto v = e.scalar("room.length")) c.room.length = *v;
  if (auto v = e.scalar("room.height")) c.room.height = *v;

  if (auto v = e.point("led.position")) c.led.position = *v;
  if (auto v = e.scalar("led.transmit_power")) c.led.transmit_power = *v;
  if (auto v = e.scalar("led.half_power_angle")) c.led.half_power_angle = Degrees(*v);
  if (auto v = e.scalar("led.lambertian_order")) c.led.lambertian_order_override = *v;

  if (auto v = e.point("pd.position")) c.pd_template.position = *v;
  if (e.has("pd.area") && e.has("pd.area_mm2")) {
    throw Error(ErrorKind::ValidationError,
                "give either pd.area or pd.area_mm2, not both");
  }
  if (auto v = e.scalar("pd.area")) c.pd_template.area = *v;
  if (auto v = e.scalar("pd.area_mm2")) c.pd_template.area = *v * 1e-6;
  if (auto v = e.scalar("pd.fov")) c.pd_template.fov = Degrees(*v);
  if (auto v = e.scalar("pd.filter_gain")) c.pd_template.filter_gain = *v;
  if (auto v = e.scalar("pd.refractive_index")) c.pd_template.refractive_index = *v;

  const bool generator = e.has("sweep.count") || e.has("sweep.start") ||
                         e.has("sweep.end");
  if (auto v = e.points("sweep.positions")) {
    if (generator) {
      throw Error(ErrorKind::ValidationError,
                  "sweep.positions cannot be combined with "
                  "sweep.count/start/end");
    }
    c.pd_positions = *v;
  } else if (generator || e.has("room.width") || e.has("room.length") ||
             e.has("room.height")) {
    const std::size_t count = e.count("sweep.count").value_or(10);
    const Point3 from = e.point("sweep.start").value_or(Point3{2.5, 2.5, 0.0});
    const Point3 to = e.point("sweep.end").value_or(Point3{0.07, 0.07, 0.0});
    try {
      c.pd_positions = diagonal_positions(c.room, count, from, to);
    } catch (const Error& err) {
      throw Error(ErrorKind::ValidationError,
                  std::string("sweep diagonal: ") + err.what());
    }
  }
  if (auto v = e.numbers("sweep.transmit_powers")) c.transmit_powers = *v;
  if (auto v = e.numbers("sweep.elevations")) {
    c.sweep_elevations.clear();
    for (double d : *v) c.sweep_elevations.emplace_back(d);
  }
  if (auto v = e.scalar("sweep.azimuth")) c.azimuth = Degrees(*v);
  if (auto v = e.count("sweep.samples")) c.distance_samples = *v;

  validate(c);
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot read config '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const Error& err) {
    throw err.annotated(path.string());
  }
}

std::string serialize_config(const ScenarioConfig& c) {
  std::ostringstream out;
  out << "[room]\n"
      << "width = " << num(c.room.width) << "\n"
      << "length = " << num(c.room.length) << "\n"
      << "height = " << num(c.room.height) << "\n\n"
      << "[led]\n"
      << "position = " << point(c.led.position) << "\n"
      << "transmit_power = " << num(c.led.transmit_power) << "\n"
      << "half_power_angle = " << num(c.led.half_power_angle.value()) << "\n";
  if (c.led.lambertian_order_override) {
    out << "lambertian_order = " << num(*c.led.lambertian_order_override)
        << "\n";
  }
  out << "\n[pd]\n"
      << "position = " << point(c.pd_template.position) << "\n"
      << "area = " << num(c.pd_template.area) << "\n"
      << "fov = " << num(c.pd_template.fov.value()) << "\n"
      << "filter_gain = " << num(c.pd_template.filter_gain) << "\n"
      << "refractive_index = " << num(c.pd_template.refractive_index) << "\n\n"
      << "[sweep]\n"
      << "positions = ";
  for (std::size_t i = 0; i < c.pd_positions.size(); ++i) {
    out << (i ? ", " : "") << point(c.pd_positions[i]);
  }
  out << "\ntransmit_powers = ";
  for (std::size_t i = 0; i < c.transmit_powers.size(); ++i) {
    out << (i ? ", " : "") << num(c.transmit_powers[i]);
  }
  out << "\nelevations = ";
  for (std::size_t i = 0; i < c.sweep_elevations.size(); ++i) {
    out << (i ? ", " : "") << num(c.sweep_elevations[i].value());
  }
  out << "\nazimuth = " << num(c.azimuth.value()) << "\n"
      << "samples = " << c.distance_samples << "\n";
  return out.str();
}

std::string config_hash(const ScenarioConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_config(config)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace vlcpos
