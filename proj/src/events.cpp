#include "swarmnaming/events.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace swarmnaming {
namespace {

using ordered_json = nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

Resource parse_resource(const std::string& s) {
  if (s == "A") return Resource::A;
  if (s == "B") return Resource::B;
  throw std::runtime_error("event log: bad resource '" + s + "'");
}

Commitment parse_commitment(const std::string& s) {
  if (s == "U") return Commitment::Uncommitted;
  if (s == "A") return Commitment::A;
  if (s == "B") return Commitment::B;
  throw std::runtime_error("event log: bad commitment '" + s + "'");
}

CreationTrigger parse_trigger(const std::string& s) {
  if (s == "self_speak") return CreationTrigger::SelfSpeak;
  if (s == "self_enter_resource") return CreationTrigger::SelfEnterResource;
  throw std::runtime_error("event log: bad trigger '" + s + "'");
}

GameOutcome parse_outcome(const std::string& s) {
  if (s == "success") return GameOutcome::Success;
  if (s == "failure") return GameOutcome::Failure;
  throw std::runtime_error("event log: bad outcome '" + s + "'");
}

std::string str(std::string_view v) { return std::string(v); }

ordered_json payload_json(const EventPayload& payload) {
  return std::visit(
      overloaded{
          [](const event::InitialCommitment& p) { return ordered_json{{"resource", str(to_string(p.resource))}}; },
          [](const event::Discovery& p) { return ordered_json{{"resource", str(to_string(p.resource))}}; },
          [](const event::Recruitment& p) {
            return ordered_json{{"resource", str(to_string(p.resource))}, {"sender", p.sender}};
          },
          [](const event::CrossInhibition& p) {
            return ordered_json{{"lost", str(to_string(p.lost))}, {"sender", p.sender}};
          },
          [](const event::Abandonment& p) { return ordered_json{{"lost", str(to_string(p.lost))}}; },
          [](const event::WordCreated& p) {
            return ordered_json{{"word", p.word.value},
                                {"provenance", str(to_string(p.provenance))},
                                {"trigger", str(to_string(p.trigger))},
                                {"creator_state", str(to_string(p.creator_state))}};
          },
          [](const event::Utterance& p) {
            ordered_json receivers = ordered_json::array();
            for (const auto& r : p.receivers) receivers.push_back(ordered_json::array({r.robot, str(to_string(r.state))}));
            return ordered_json{
                {"word", p.word.value}, {"speaker_state", str(to_string(p.speaker_state))}, {"receivers", receivers}};
          },
          [](const event::Game& p) {
            ordered_json inventory = ordered_json::array();
            for (const WordId w : p.inventory) inventory.push_back(w.value);
            return ordered_json{{"speaker", p.speaker},
                                {"word", p.word.value},
                                {"outcome", str(to_string(p.outcome))},
                                {"hearer_state", str(to_string(p.hearer_state))},
                                {"speaker_state", str(to_string(p.speaker_state))},
                                {"inventory", inventory}};
          },
          [](const event::Convergence& p) { return ordered_json{{"word", p.word.value}}; },
          [](const event::Timeout&) { return ordered_json::object(); },
      },
      payload);
}

EventPayload payload_from_json(const std::string& type, const ordered_json& j) {
  auto word = [&](const char* key) { return WordId{j.at(key).get<std::uint32_t>()}; };
  if (type == "initial_commitment") return event::InitialCommitment{parse_resource(j.at("resource"))};
  if (type == "discovery") return event::Discovery{parse_resource(j.at("resource"))};
  if (type == "recruitment") {
    return event::Recruitment{parse_resource(j.at("resource")), j.at("sender").get<RobotId>()};
  }
  if (type == "cross_inhibition") {
    return event::CrossInhibition{parse_resource(j.at("lost")), j.at("sender").get<RobotId>()};
  }
  if (type == "abandonment") return event::Abandonment{parse_resource(j.at("lost"))};
  if (type == "word_created") {
    return event::WordCreated{word("word"), parse_resource(j.at("provenance")), parse_trigger(j.at("trigger")),
                              parse_commitment(j.at("creator_state"))};
  }
  if (type == "utterance") {
    event::Utterance u{word("word"), parse_commitment(j.at("speaker_state")), {}};
    for (const auto& r : j.at("receivers")) {
      u.receivers.push_back({r.at(0).get<RobotId>(), parse_commitment(r.at(1).get<std::string>())});
    }
    return u;
  }
  if (type == "game") {
    event::Game g{j.at("speaker").get<RobotId>(), word("word"),
                  parse_outcome(j.at("outcome")),   parse_commitment(j.at("hearer_state")),
                  parse_commitment(j.at("speaker_state")), {}};
    for (const auto& w : j.at("inventory")) g.inventory.push_back(WordId{w.get<std::uint32_t>()});
    return g;
  }
  if (type == "convergence") return event::Convergence{word("word")};
  if (type == "timeout") return event::Timeout{};
  throw std::runtime_error("event log: unknown event type '" + type + "'");
}

}  // namespace

std::string_view event_type_name(const EventPayload& payload) {
  return std::visit(overloaded{
                        [](const event::InitialCommitment&) { return std::string_view("initial_commitment"); },
                        [](const event::Discovery&) { return std::string_view("discovery"); },
                        [](const event::Recruitment&) { return std::string_view("recruitment"); },
                        [](const event::CrossInhibition&) { return std::string_view("cross_inhibition"); },
                        [](const event::Abandonment&) { return std::string_view("abandonment"); },
                        [](const event::WordCreated&) { return std::string_view("word_created"); },
                        [](const event::Utterance&) { return std::string_view("utterance"); },
                        [](const event::Game&) { return std::string_view("game"); },
                        [](const event::Convergence&) { return std::string_view("convergence"); },
                        [](const event::Timeout&) { return std::string_view("timeout"); },
                    },
                    payload);
}

std::string to_json_line(const Event& e) {
  ordered_json j;
  j["t"] = e.t;
  j["type"] = str(event_type_name(e.payload));
  if (e.robot) {
    j["robot"] = *e.robot;
  } else {
    j["robot"] = nullptr;
  }
  j["payload"] = payload_json(e.payload);
  return j.dump();
}

Event event_from_json_line(std::string_view line) {
  const auto j = ordered_json::parse(line);
  Event e;
  e.t = j.at("t").get<double>();
  if (!j.at("robot").is_null()) e.robot = j.at("robot").get<RobotId>();
  e.payload = payload_from_json(j.at("type").get<std::string>(), j.at("payload"));
  return e;
}

void write_event_log(std::ostream& out, const std::vector<Event>& events) {
  for (const auto& e : events) out << to_json_line(e) << '\n';
}

std::vector<Event> read_event_log(std::istream& in) {
  std::vector<Event> events;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      events.push_back(event_from_json_line(line));
    } catch (const std::exception& ex) {
      throw std::runtime_error("event log line " + std::to_string(line_no) + ": " + ex.what());
    }
  }
  return events;
}

std::uint64_t event_log_digest(const std::vector<Event>& events) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& e : events) {
    for (const unsigned char c : to_json_line(e) + '\n') {
      h ^= c;
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace swarmnaming
