#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "swarmnaming/arena.hpp"
#include "swarmnaming/naming_game.hpp"
#include "swarmnaming/robot.hpp"

namespace swarmnaming {

/// Payloads of the typed, timestamped run log.
namespace event {

struct InitialCommitment {
  Resource resource;
  friend bool operator==(const InitialCommitment&, const InitialCommitment&) = default;
};
struct Discovery {
  Resource resource;
  friend bool operator==(const Discovery&, const Discovery&) = default;
};
struct Recruitment {
  Resource resource;
  RobotId sender;
  friend bool operator==(const Recruitment&, const Recruitment&) = default;
};
struct CrossInhibition {
  Resource lost;
  RobotId sender;
  friend bool operator==(const CrossInhibition&, const CrossInhibition&) = default;
};
struct Abandonment {
  Resource lost;
  friend bool operator==(const Abandonment&, const Abandonment&) = default;
};
struct WordCreated {
  WordId word;
  Resource provenance;
  CreationTrigger trigger;
  Commitment creator_state;
  friend bool operator==(const WordCreated&, const WordCreated&) = default;
};
struct Receiver {
  RobotId robot;
  Commitment state;
  friend bool operator==(const Receiver&, const Receiver&) = default;
};
/// A broadcast; receivers are the robots that took part as hearers.
struct Utterance {
  WordId word;
  Commitment speaker_state;
  std::vector<Receiver> receivers;
  friend bool operator==(const Utterance&, const Utterance&) = default;
};
/// One hearer-side game; inventory is the hearer's inventory afterwards.
struct Game {
  RobotId speaker;
  WordId word;
  GameOutcome outcome;
  Commitment hearer_state;
  Commitment speaker_state;
  std::vector<WordId> inventory;
  friend bool operator==(const Game&, const Game&) = default;
};
struct Convergence {
  WordId word;
  friend bool operator==(const Convergence&, const Convergence&) = default;
};
struct Timeout {
  friend bool operator==(const Timeout&, const Timeout&) = default;
};

}  // namespace event

using EventPayload =
    std::variant<event::InitialCommitment, event::Discovery, event::Recruitment, event::CrossInhibition,
                 event::Abandonment, event::WordCreated, event::Utterance, event::Game, event::Convergence,
                 event::Timeout>;

struct Event {
  double t = 0.0;
  std::optional<RobotId> robot;  // empty for run-level events
  EventPayload payload;
  friend bool operator==(const Event&, const Event&) = default;
};

std::string_view event_type_name(const EventPayload& payload);

/// One JSON object per line: {"t":..,"type":..,"robot":..,"payload":{..}}.
std::string to_json_line(const Event& e);
Event event_from_json_line(std::string_view line);

void write_event_log(std::ostream& out, const std::vector<Event>& events);
std::vector<Event> read_event_log(std::istream& in);

/// FNV-1a over the serialized log.
std::uint64_t event_log_digest(const std::vector<Event>& events);

}  // namespace swarmnaming
