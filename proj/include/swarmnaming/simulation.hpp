#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "swarmnaming/arena.hpp"
#include "swarmnaming/config.hpp"
#include "swarmnaming/events.hpp"
#include "swarmnaming/metrics.hpp"
#include "swarmnaming/naming_game.hpp"
#include "swarmnaming/random.hpp"
#include "swarmnaming/robot.hpp"

namespace swarmnaming {

/// Fixed initial positions and a speaker schedule replacing the Bernoulli
/// speak draws. Only valid in mean-field mode, where robots do not move.
struct ScriptedScenario {
  std::vector<Vec2> positions;
  std::map<std::int64_t, std::vector<RobotId>> speakers;  // step -> robots
};

struct RunRecord {
  RunConfig config;
  std::vector<Event> events;
  std::vector<PopulationSnapshot> populations;
  NeighborhoodCounts neighborhoods;
  bool converged = false;
  std::optional<WordId> consensus_word;
  std::int64_t steps = 0;
  double t_end = 0.0;
  double wall_seconds = 0.0;
};

/// One run. Each step runs the phases in a fixed order: motion, arrivals
/// (discovery and spatial word creation), commitment transitions, speak
/// decisions, utterance delivery and hearer updates, bookkeeping. All
/// randomness comes from one generator consumed phase by phase in robot
/// index order, so a run is a pure function of its config.
class Simulation {
 public:
  explicit Simulation(RunConfig config, std::optional<ScriptedScenario> script = std::nullopt);

  /// Advances one step; false once the run has finished.
  bool step();
  RunRecord run();

  [[nodiscard]] const RunConfig& config() const { return config_; }
  [[nodiscard]] const Arena& arena() const { return arena_; }
  [[nodiscard]] const std::vector<Robot>& robots() const { return robots_; }
  [[nodiscard]] const Lexicon& lexicon() const { return lexicon_; }
  [[nodiscard]] const std::vector<Event>& events() const { return events_; }
  [[nodiscard]] std::int64_t step_index() const { return step_; }
  [[nodiscard]] double time() const { return time_of(step_); }
  [[nodiscard]] bool finished() const { return finished_; }
  [[nodiscard]] bool in_warmup() const { return time() <= config_.warmup_s; }

 private:
  [[nodiscard]] double time_of(std::int64_t step) const { return static_cast<double>(step) / steps_per_second_; }
  [[nodiscard]] std::int64_t steps_for(double seconds) const;

  void initialise();
  void move_robots();
  void process_arrivals();
  void update_commitments();
  void play_naming_game();
  void bookkeeping();

  void log(std::optional<RobotId> robot, EventPayload payload);
  void uncommit(Robot& robot);

  RunConfig config_;
  std::optional<ScriptedScenario> script_;
  Arena arena_;
  Rng rng_;
  std::vector<Robot> robots_;
  Lexicon lexicon_;
  std::vector<Event> events_;
  std::vector<PopulationSnapshot> populations_;
  NeighborhoodCounts neighborhoods_;

  double steps_per_second_;
  std::int64_t max_steps_;
  std::int64_t snapshot_every_;
  std::int64_t neighborhood_every_;
  std::int64_t step_ = 0;
  bool warmup_done_ = false;
  bool converged_ = false;
  bool finished_ = false;
  std::optional<WordId> consensus_;

  // scratch buffers reused across steps
  std::vector<Vec2> positions_;
  std::vector<std::vector<Vec2>> close_;
  std::vector<Commitment> states_;
  std::vector<double> beacon_ready_at_;  // earliest time the next beacon is acted on
};

/// Runs a config to completion.
RunRecord simulate(const RunConfig& config);

}  // namespace swarmnaming
