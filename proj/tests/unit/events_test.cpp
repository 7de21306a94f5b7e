#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "swarmnaming/events.hpp"
#include "swarmnaming/random.hpp"

using namespace swarmnaming;

namespace {

Commitment any_state(Rng& rng) { return static_cast<Commitment>(rng.index(3)); }
Resource any_resource(Rng& rng) { return rng.coin() ? Resource::A : Resource::B; }

Event random_event(Rng& rng) {
  Event e;
  e.t = static_cast<double>(rng.index(1'000'000)) / 10.0;
  e.robot = static_cast<RobotId>(rng.index(50));
  const WordId w{static_cast<std::uint32_t>(rng.index(300))};
  switch (rng.index(10)) {
    case 0: e.payload = event::InitialCommitment{any_resource(rng)}; break;
    case 1: e.payload = event::Discovery{any_resource(rng)}; break;
    case 2: e.payload = event::Recruitment{any_resource(rng), static_cast<RobotId>(rng.index(50))}; break;
    case 3: e.payload = event::CrossInhibition{any_resource(rng), static_cast<RobotId>(rng.index(50))}; break;
    case 4: e.payload = event::Abandonment{any_resource(rng)}; break;
    case 5:
      e.payload = event::WordCreated{w, any_resource(rng),
                                     rng.coin() ? CreationTrigger::SelfSpeak : CreationTrigger::SelfEnterResource,
                                     any_state(rng)};
      break;
    case 6: {
      event::Utterance u{w, any_state(rng), {}};
      for (std::size_t i = rng.index(5); i > 0; --i) u.receivers.push_back({static_cast<RobotId>(rng.index(50)), any_state(rng)});
      e.payload = u;
      break;
    }
    case 7: {
      event::Game g{static_cast<RobotId>(rng.index(50)), w, rng.coin() ? GameOutcome::Success : GameOutcome::Failure,
                    any_state(rng), any_state(rng), {}};
      for (std::size_t i = rng.index(4) + 1; i > 0; --i) g.inventory.push_back(WordId{static_cast<std::uint32_t>(rng.index(300))});
      e.payload = g;
      break;
    }
    case 8:
      e.robot.reset();
      e.payload = event::Convergence{w};
      break;
    default:
      e.robot.reset();
      e.payload = event::Timeout{};
      break;
  }
  return e;
}

}  // namespace

TEST_SUITE("events") {

TEST_CASE("line format") {
  const Event e{12.5, RobotId{3}, event::Recruitment{Resource::B, 9}};
  const std::string line = to_json_line(e);
  CHECK(line == R"({"t":12.5,"type":"recruitment","robot":3,"payload":{"resource":"B","sender":9}})");
  CHECK(event_type_name(e.payload) == "recruitment");
  const Event run_level{100.0, std::nullopt, event::Timeout{}};
  CHECK(to_json_line(run_level).find(R"("robot":null)") != std::string::npos);
}

TEST_CASE("every event survives a round trip") {
  Rng rng(42);
  std::vector<Event> log;
  for (int i = 0; i < 3000; ++i) {
    const Event e = random_event(rng);
    CHECK(event_from_json_line(to_json_line(e)) == e);
    log.push_back(e);
  }
  std::stringstream io;
  write_event_log(io, log);
  const auto back = read_event_log(io);
  CHECK(back == log);
  CHECK(event_log_digest(back) == event_log_digest(log));
}

TEST_CASE("digest reacts to any change") {
  std::vector<Event> log{{1.0, RobotId{0}, event::Discovery{Resource::A}}};
  const auto d = event_log_digest(log);
  log[0].t = 1.1;
  CHECK(event_log_digest(log) != d);
  CHECK(event_log_digest({}) != d);
}

TEST_CASE("malformed lines are rejected") {
  CHECK_THROWS(event_from_json_line("not json"));
  CHECK_THROWS(event_from_json_line(R"({"t":1,"type":"teleport","robot":1,"payload":{}})"));
  CHECK_THROWS(event_from_json_line(R"({"t":1,"type":"discovery","robot":1,"payload":{"resource":"C"}})"));
}

}
