#include <doctest.h>

#include <algorithm>

#include "swarmnaming/metrics.hpp"
#include "swarmnaming/simulation.hpp"

using namespace swarmnaming;

namespace {

template <class T>
std::size_t count_of(const std::vector<Event>& events) {
  return std::count_if(events.begin(), events.end(), [](const Event& e) { return std::holds_alternative<T>(e.payload); });
}

std::size_t commitment_events(const std::vector<Event>& events) {
  return count_of<event::Discovery>(events) + count_of<event::Recruitment>(events) +
         count_of<event::CrossInhibition>(events) + count_of<event::Abandonment>(events);
}

RunConfig short_run(double horizon) {
  RunConfig c;
  c.horizon_s = horizon;
  return c;
}

std::vector<WordId> held(const Robot& r) {
  const auto w = r.inventory.words();
  std::vector<WordId> v(w.begin(), w.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("simulation") {

TEST_CASE("same seed gives the same log") {
  RunConfig c = short_run(900.0);
  c.p_speak = 0.01;
  c.seed = 17;
  const auto a = simulate(c);
  const auto b = simulate(c);
  CHECK(a.events.size() == b.events.size());
  CHECK(event_log_digest(a.events) == event_log_digest(b.events));
  c.seed = 18;
  CHECK(event_log_digest(simulate(c).events) != event_log_digest(a.events));
}

TEST_CASE("silent swarm times out") {
  RunConfig c = short_run(600.0);
  c.p_speak = 0.0;
  const auto r = simulate(c);
  CHECK_FALSE(r.converged);
  CHECK(r.t_end == doctest::Approx(600.0));
  CHECK(count_of<event::Utterance>(r.events) == 0);
  CHECK(count_of<event::WordCreated>(r.events) == 0);
  CHECK(count_of<event::Timeout>(r.events) == 1);
}

TEST_CASE("foraging runs pass the audit") {
  for (auto variant : {GameVariant::Classic, GameVariant::Spatial}) {
    RunConfig c = short_run(1500.0);
    c.p_speak = 0.01;
    c.variant = variant;
    c.seed = 5;
    const auto r = simulate(c);
    const auto report = audit_run(r.events, r.populations, c.n_robots, c.warmup_s);
    CHECK(report.games > 0);
    CHECK(report.warmup_violations == 0);
    CHECK(report.conservation_violations == 0);
    CHECK(report.provenance_violations == 0);
    CHECK(report.game_law_violations == 0);
    for (const Event& e : r.events) {
      if (const auto* w = std::get_if<event::WordCreated>(&e.payload)) {
        CHECK(w->trigger == (variant == GameVariant::Classic ? CreationTrigger::SelfSpeak
                                                             : CreationTrigger::SelfEnterResource));
      }
    }
  }
}

TEST_CASE("scripted three-robot trace") {
  RunConfig c;
  c.mode = Mode::MeanField;
  c.n_robots = 3;
  c.warmup_s = 0.0;
  c.mean_field_broadcast = true;
  c.p_speak = 0.0;
  ScriptedScenario script{{{-0.05, 0.0}, {0.05, 0.0}, {0.01, 0.05}}, {{1, {0, 1, 2}}, {2, {0}}, {3, {0}}}};
  Simulation sim(c, script);
  const WordId w0{0}, w1{1}, w2{2};

  sim.step();
  CHECK(held(sim.robots()[0]) == std::vector{w0});
  CHECK(held(sim.robots()[1]) == std::vector{w1});
  CHECK(held(sim.robots()[2]) == std::vector{w2});
  CHECK(sim.lexicon().word(w0).provenance == Resource::A);
  CHECK(sim.lexicon().word(w1).provenance == Resource::B);
  CHECK(sim.lexicon().word(w2).provenance == Resource::B);
  CHECK(count_of<event::Game>(sim.events()) == 0);  // speakers do not listen

  sim.step();
  CHECK(held(sim.robots()[0]) == std::vector{w0});
  CHECK(held(sim.robots()[1]) == std::vector{w0, w1});
  CHECK(held(sim.robots()[2]) == std::vector{w0, w2});
  CHECK_FALSE(sim.finished());

  CHECK_FALSE(sim.step());
  for (const Robot& r : sim.robots()) CHECK(held(r) == std::vector{w0});
  REQUIRE(sim.events().size() > 0);
  const auto* conv = std::get_if<event::Convergence>(&sim.events().back().payload);
  REQUIRE(conv);
  CHECK(conv->word == w0);

  std::size_t successes = 0, failures = 0;
  for (const Event& e : sim.events()) {
    if (const auto* g = std::get_if<event::Game>(&e.payload)) {
      (g->outcome == GameOutcome::Success ? successes : failures)++;
    }
  }
  CHECK(failures == 2);
  CHECK(successes == 2);
}

TEST_CASE("scripted scenarios need mean-field mode") {
  RunConfig c;
  c.n_robots = 1;
  CHECK_THROWS_AS(Simulation(c, ScriptedScenario{{{0, 0}}, {}}), ConfigError);
  c.mode = Mode::MeanField;
  CHECK_THROWS_AS(Simulation(c, ScriptedScenario{{}, {}}), ConfigError);
}

TEST_CASE("mean-field game converges") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    RunConfig c;
    c.mode = Mode::MeanField;
    c.n_robots = 20;
    c.seed = seed;
    const auto r = simulate(c);
    CHECK(r.converged);
    CHECK(commitment_events(r.events) == 0);
    REQUIRE(r.consensus_word);
    CHECK(std::get<event::Convergence>(r.events.back().payload).word == *r.consensus_word);
  }
}

TEST_CASE("locked runs keep their commitments") {
  RunConfig c = short_run(400.0);
  c.mode = Mode::Locked;
  c.locked_n = 7;
  const auto r = simulate(c);
  CHECK(commitment_events(r.events) == 0);
  CHECK(count_of<event::Utterance>(r.events) == 0);
  CHECK(count_of<event::InitialCommitment>(r.events) == c.n_robots);
  for (const auto& s : r.populations) {
    CHECK(s.committed_a == 7);
    CHECK(s.committed_b == c.n_robots - 7);
  }
  CHECK(r.neighborhoods.total(Scope::Whole) > 0);
}

TEST_CASE("random walk never commits") {
  RunConfig c = short_run(400.0);
  c.mode = Mode::RandomWalk;
  const auto r = simulate(c);
  CHECK(r.events.size() == 1);  // only the timeout
  for (const auto& s : r.populations) CHECK(s.uncommitted == c.n_robots);
}

TEST_CASE("commitment-only runs stay silent") {
  RunConfig c = short_run(1500.0);
  c.mode = Mode::CommitmentOnly;
  c.p_speak = 0.5;
  const auto r = simulate(c);
  CHECK(count_of<event::Utterance>(r.events) == 0);
  CHECK(count_of<event::WordCreated>(r.events) == 0);
  CHECK(count_of<event::Discovery>(r.events) > 0);
  const auto report = audit_run(r.events, r.populations, c.n_robots, c.warmup_s);
  CHECK(report.conservation_violations == 0);
  CHECK(report.warmup_violations == 0);
}

TEST_CASE("neighborhood sampling starts after warm-up") {
  RunConfig c = short_run(210.0);
  c.mode = Mode::RandomWalk;
  // one sample per second at t = 201 .. 210, one entry per robot
  CHECK(simulate(c).neighborhoods.total(Scope::Whole) == 10 * c.n_robots);
}

}
