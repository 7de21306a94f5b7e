#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "swarmnaming/commitment.hpp"
#include "swarmnaming/motion.hpp"
#include "swarmnaming/naming_game.hpp"

namespace swarmnaming {

/// Which modules a run activates.
enum class Mode : std::uint8_t {
  Foraging,        // full model
  MeanField,       // static fully connected naming game, no motion, no commitment
  Locked,          // fixed committed sub-populations, all transitions and the game disabled
  RandomWalk,      // pure correlated random walk, neighborhood statistics only
  CommitmentOnly,  // foraging without the naming game
};

std::string_view to_string(Mode m);

struct RunConfig {
  std::size_t n_robots = 50;
  double area_radius = 0.3;
  double nest_distance = 2.5;
  MotionParams motion;
  double comm_radius = 0.2;
  double warmup_s = 200.0;
  double horizon_s = 12000.0;
  double p_speak = 0.001;
  CommitmentParams commitment;
  double beacon_refractory_s = 0.0;  // after acting on a beacon, ignore beacons this long; reset on leaving the nest
  GameVariant variant = GameVariant::Classic;
  Mode mode = Mode::Foraging;
  std::uint64_t seed = 1;
  std::size_t locked_n = 25;           // robots locked to A; the rest to B
  bool mean_field_broadcast = false;   // mean-field: utterance reaches everyone instead of one random robot
  bool stop_at_convergence = true;
  double snapshot_interval_s = 10.0;
  double neighborhood_interval_s = 1.0;
};

/// Config problem attributable to one key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error("config key '" + key + "': " + message), key_(std::move(key)) {}
  [[nodiscard]] const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Every recognised key, in file order.
const std::vector<std::string>& config_keys();

/// Sets one key from its text form. Unknown keys and unparsable values throw
/// ConfigError.
void set_config_value(RunConfig& config, std::string_view key, std::string_view value);
std::string get_config_value(const RunConfig& config, std::string_view key);

/// Throws ConfigError naming the first offending key.
void validate(const RunConfig& config);

/// Flat "key = value" text; '#' starts a comment. Keys not present keep their
/// defaults. The result is validated.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

/// Every key, one per line, round-trippable through parse_config.
std::string to_config_text(const RunConfig& config);

}  // namespace swarmnaming
