#include "swarmnaming/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace swarmnaming {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view key, std::string_view text) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ConfigError(std::string(key), "expected a finite number, got '" + std::string(text) + "'");
  }
  return v;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view text) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ConfigError(std::string(key), "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ConfigError(std::string(key), "expected true or false, got '" + std::string(text) + "'");
}

GameVariant parse_variant(std::string_view key, std::string_view text) {
  if (text == "classic") return GameVariant::Classic;
  if (text == "spatial") return GameVariant::Spatial;
  throw ConfigError(std::string(key), "expected classic or spatial, got '" + std::string(text) + "'");
}

Mode parse_mode(std::string_view key, std::string_view text) {
  if (text == "foraging") return Mode::Foraging;
  if (text == "mean_field") return Mode::MeanField;
  if (text == "locked") return Mode::Locked;
  if (text == "random_walk") return Mode::RandomWalk;
  if (text == "commitment_only") return Mode::CommitmentOnly;
  throw ConfigError(std::string(key), "unknown mode '" + std::string(text) + "'");
}

struct KeyAccess {
  std::function<void(RunConfig&, std::string_view, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

template <class Member>
KeyAccess double_key(Member member) {
  return {[member](RunConfig& c, std::string_view k, std::string_view v) { member(c) = parse_double(k, v); },
          [member](const RunConfig& c) { return format_double(member(c)); }};
}

template <class Member>
KeyAccess size_key(Member member) {
  return {[member](RunConfig& c, std::string_view k, std::string_view v) {
            member(c) = static_cast<std::remove_cvref_t<decltype(member(c))>>(parse_unsigned(k, v));
          },
          [member](const RunConfig& c) { return std::to_string(member(c)); }};
}

template <class Member>
KeyAccess bool_key(Member member) {
  return {[member](RunConfig& c, std::string_view k, std::string_view v) { member(c) = parse_bool(k, v); },
          [member](const RunConfig& c) { return std::string(member(c) ? "true" : "false"); }};
}

const std::vector<std::pair<std::string, KeyAccess>>& key_table() {
  static const std::vector<std::pair<std::string, KeyAccess>> table = {
      {"mode",
       {[](RunConfig& c, std::string_view k, std::string_view v) { c.mode = parse_mode(k, v); },
        [](const RunConfig& c) { return std::string(to_string(c.mode)); }}},
      {"variant",
       {[](RunConfig& c, std::string_view k, std::string_view v) { c.variant = parse_variant(k, v); },
        [](const RunConfig& c) { return std::string(to_string(c.variant)); }}},
      {"seed", size_key([](auto& c) -> auto& { return c.seed; })},
      {"n_robots", size_key([](auto& c) -> auto& { return c.n_robots; })},
      {"locked_n", size_key([](auto& c) -> auto& { return c.locked_n; })},
      {"area_radius", double_key([](auto& c) -> auto& { return c.area_radius; })},
      {"nest_distance", double_key([](auto& c) -> auto& { return c.nest_distance; })},
      {"dt", double_key([](auto& c) -> auto& { return c.motion.dt; })},
      {"speed", double_key([](auto& c) -> auto& { return c.motion.speed; })},
      {"comm_radius", double_key([](auto& c) -> auto& { return c.comm_radius; })},
      {"turn_sigma", double_key([](auto& c) -> auto& { return c.motion.turn_sigma; })},
      {"avoid_radius", double_key([](auto& c) -> auto& { return c.motion.avoid_radius; })},
      {"avoid_gain", double_key([](auto& c) -> auto& { return c.motion.avoid_gain; })},
      {"arrival_radius", double_key([](auto& c) -> auto& { return c.motion.arrival_radius; })},
      {"waypoint_spread", double_key([](auto& c) -> auto& { return c.motion.waypoint_spread; })},
      {"p_return", double_key([](auto& c) -> auto& { return c.motion.p_return; })},
      {"warmup_s", double_key([](auto& c) -> auto& { return c.warmup_s; })},
      {"horizon_s", double_key([](auto& c) -> auto& { return c.horizon_s; })},
      {"p_speak", double_key([](auto& c) -> auto& { return c.p_speak; })},
      {"p_recruit", double_key([](auto& c) -> auto& { return c.commitment.p_recruit; })},
      {"p_cross_inhibit", double_key([](auto& c) -> auto& { return c.commitment.p_cross_inhibit; })},
      {"p_abandon", double_key([](auto& c) -> auto& { return c.commitment.p_abandon; })},
      {"beacon_refractory_s", double_key([](auto& c) -> auto& { return c.beacon_refractory_s; })},
      {"mean_field_broadcast", bool_key([](auto& c) -> auto& { return c.mean_field_broadcast; })},
      {"stop_at_convergence", bool_key([](auto& c) -> auto& { return c.stop_at_convergence; })},
      {"snapshot_interval_s", double_key([](auto& c) -> auto& { return c.snapshot_interval_s; })},
      {"neighborhood_interval_s", double_key([](auto& c) -> auto& { return c.neighborhood_interval_s; })},
  };
  return table;
}

const KeyAccess& access(std::string_view key) {
  for (const auto& [name, acc] : key_table()) {
    if (name == key) return acc;
  }
  throw ConfigError(std::string(key), "unknown key");
}

void require(bool ok, const char* key, const std::string& message) {
  if (!ok) throw ConfigError(key, message);
}

void require_probability(double p, const char* key) { require(p >= 0.0 && p <= 1.0, key, "must lie in [0, 1]"); }

}  // namespace

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Foraging: return "foraging";
    case Mode::MeanField: return "mean_field";
    case Mode::Locked: return "locked";
    case Mode::RandomWalk: return "random_walk";
    case Mode::CommitmentOnly: return "commitment_only";
  }
  return "foraging";
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, acc] : key_table()) k.push_back(name);
    return k;
  }();
  return keys;
}

void set_config_value(RunConfig& config, std::string_view key, std::string_view value) {
  access(key).set(config, key, trim(value));
}

std::string get_config_value(const RunConfig& config, std::string_view key) { return access(key).get(config); }

void validate(const RunConfig& c) {
  require(c.n_robots >= 1, "n_robots", "must be at least 1");
  require(c.area_radius > 0.0, "area_radius", "must be positive");
  require(c.nest_distance > 2.0 * c.area_radius, "nest_distance", "must exceed 2 * area_radius (disjoint areas)");
  require(c.motion.dt > 0.0, "dt", "must be positive");
  require(c.motion.speed >= 0.0, "speed", "must be non-negative");
  require(c.comm_radius >= 0.0, "comm_radius", "must be non-negative");
  require(c.motion.turn_sigma >= 0.0, "turn_sigma", "must be non-negative");
  require(c.motion.avoid_radius >= 0.0, "avoid_radius", "must be non-negative");
  require(c.motion.avoid_gain >= 0.0, "avoid_gain", "must be non-negative");
  require(c.motion.waypoint_spread >= 0.0 && c.motion.waypoint_spread <= 1.0, "waypoint_spread", "must lie in [0, 1]");
  require(c.motion.arrival_radius > 0.0 && c.motion.arrival_radius <= c.area_radius, "arrival_radius",
          "must lie in (0, area_radius]");
  require(c.motion.arrival_radius >= c.motion.speed * c.motion.dt, "arrival_radius",
          "must be at least speed * dt so waypoints cannot be overshot");
  require_probability(c.motion.p_return, "p_return");
  require_probability(c.p_speak, "p_speak");
  require_probability(c.commitment.p_recruit, "p_recruit");
  require_probability(c.commitment.p_cross_inhibit, "p_cross_inhibit");
  require_probability(c.commitment.p_abandon, "p_abandon");
  require(c.beacon_refractory_s >= 0.0, "beacon_refractory_s", "must be non-negative");
  require(c.warmup_s >= 0.0, "warmup_s", "must be non-negative");
  require(c.horizon_s > c.warmup_s, "horizon_s", "must exceed warmup_s");
  require(c.snapshot_interval_s > 0.0, "snapshot_interval_s", "must be positive");
  require(c.neighborhood_interval_s > 0.0, "neighborhood_interval_s", "must be positive");
  if (c.mode == Mode::Locked) require(c.locked_n <= c.n_robots, "locked_n", "must not exceed n_robots");
  if (c.mode == Mode::MeanField) {
    require(c.variant == GameVariant::Classic, "variant",
            "mean_field mode has no resource entries, so only the classic variant creates words");
  }
}

RunConfig parse_config(std::istream& in) {
  RunConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::string(view), "line " + std::to_string(line_no) + " is not of the form key = value");
    }
    set_config_value(config, trim(view.substr(0, eq)), view.substr(eq + 1));
  }
  validate(config);
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  return parse_config(in);
}

std::string to_config_text(const RunConfig& config) {
  std::ostringstream out;
  for (const auto& [name, acc] : key_table()) out << name << " = " << acc.get(config) << '\n';
  return out.str();
}

}  // namespace swarmnaming
