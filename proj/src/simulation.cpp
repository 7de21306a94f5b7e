#include "swarmnaming/simulation.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swarmnaming {
namespace {

bool moves(Mode m) { return m != Mode::MeanField; }
bool has_commitment_dynamics(Mode m) { return m == Mode::Foraging || m == Mode::CommitmentOnly; }
bool plays_game(Mode m) { return m == Mode::Foraging || m == Mode::MeanField; }

}  // namespace

Simulation::Simulation(RunConfig config, std::optional<ScriptedScenario> script)
    : config_(std::move(config)),
      script_(std::move(script)),
      arena_(config_.area_radius, config_.nest_distance),
      rng_(config_.seed),
      steps_per_second_(1.0 / config_.motion.dt) {
  validate(config_);
  if (script_) {
    if (config_.mode != Mode::MeanField) throw ConfigError("mode", "scripted scenarios require mean_field mode");
    if (script_->positions.size() != config_.n_robots) {
      throw ConfigError("n_robots", "scripted scenario lists a different number of robots");
    }
  }
  max_steps_ = steps_for(config_.horizon_s);
  snapshot_every_ = std::max<std::int64_t>(1, steps_for(config_.snapshot_interval_s));
  neighborhood_every_ = std::max<std::int64_t>(1, steps_for(config_.neighborhood_interval_s));
  initialise();
}

std::int64_t Simulation::steps_for(double seconds) const {
  return static_cast<std::int64_t>(std::llround(seconds * steps_per_second_));
}

void Simulation::log(std::optional<RobotId> robot, EventPayload payload) {
  events_.push_back(Event{time(), robot, std::move(payload)});
}

void Simulation::uncommit(Robot& robot) {
  robot.commitment = Commitment::Uncommitted;
  robot.mode = MotionMode::Explore;
}

void Simulation::initialise() {
  const std::size_t n = config_.n_robots;
  robots_.resize(n);
  positions_.resize(n);
  close_.resize(n);
  states_.resize(n);
  beacon_ready_at_.assign(n, 0.0);
  warmup_done_ = config_.warmup_s <= 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    Robot& r = robots_[i];
    r.id = static_cast<RobotId>(i);
    switch (config_.mode) {
      case Mode::MeanField:
        r.pose.position = script_ ? script_->positions[i] : uniform_in_disc(arena_.nest_center(), arena_.area_radius(), rng_);
        r.mode = MotionMode::Explore;
        break;
      case Mode::Locked: {
        // spread along the route, half of them heading each way
        const Resource res = i < config_.locked_n ? Resource::A : Resource::B;
        r.commitment = committed_to(res);
        head_to(r, rng_.coin() ? MotionMode::GoToNest : MotionMode::GoToResource, arena_, config_.motion, rng_);
        const Vec2 from = r.mode == MotionMode::GoToNest ? arena_.resource_center(res) : arena_.nest_center();
        r.pose.position = from + (r.waypoint - from) * rng_.uniform();
        const Vec2 to = r.waypoint - r.pose.position;
        r.pose.heading = wrap_angle(std::atan2(to.y, to.x));
        log(r.id, event::InitialCommitment{res});
        break;
      }
      default:
        r.pose.position = uniform_in_disc(arena_.nest_center(), arena_.area_radius(), rng_);
        r.pose.heading = wrap_angle(2.0 * std::numbers::pi * rng_.uniform());
        r.mode = warmup_done_ ? MotionMode::Explore : MotionMode::BlindWalk;
        break;
    }
    r.area = arena_.classify(r.pose.position);
  }
  populations_.push_back(take_snapshot(0.0, robots_, lexicon_));
}

bool Simulation::step() {
  if (finished_) return false;
  ++step_;
  const bool warm = in_warmup();
  if (!warm && !warmup_done_) {
    warmup_done_ = true;
    for (Robot& r : robots_) {
      if (r.mode == MotionMode::BlindWalk) r.mode = MotionMode::Explore;
    }
  }
  if (moves(config_.mode)) {
    move_robots();
    process_arrivals();
  }
  if (!warm) {
    if (has_commitment_dynamics(config_.mode)) update_commitments();
    if (plays_game(config_.mode)) play_naming_game();
  }
  bookkeeping();
  return !finished_;
}

void Simulation::move_robots() {
  const std::size_t n = robots_.size();
  const double avoid2 = config_.motion.avoid_radius * config_.motion.avoid_radius;
  for (std::size_t i = 0; i < n; ++i) {
    positions_[i] = robots_[i].pose.position;
    close_[i].clear();
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (squared_distance(positions_[i], positions_[j]) < avoid2) {
        close_[i].push_back(positions_[j]);
        close_[j].push_back(positions_[i]);
      }
    }
  }
  const bool may_return = !in_warmup() && has_commitment_dynamics(config_.mode);
  for (std::size_t i = 0; i < n; ++i) {
    Robot& r = robots_[i];
    if (may_return) maybe_return_to_nest(r, arena_, config_.motion, rng_);
    r.pose = step_motion(r, close_[i], config_.motion, rng_);
  }
}

void Simulation::process_arrivals() {
  const bool warm = in_warmup();
  const bool spatial_words = plays_game(config_.mode) && config_.variant == GameVariant::Spatial;
  const bool discovery = has_commitment_dynamics(config_.mode);
  for (Robot& r : robots_) {
    const ArrivalEvent ev = arrival_check(r, arena_, config_.motion, rng_);
    if (warm || ev.kind != ArrivalKind::ReachedResource) continue;
    // the word is tagged with the state the robot entered in
    if (spatial_words) {
      if (auto w = on_enter_resource(r, ev.resource, config_.variant, time(), lexicon_)) {
        log(r.id, event::WordCreated{*w, ev.resource, CreationTrigger::SelfEnterResource, r.commitment});
      }
    }
    if (discovery) {
      const auto res = on_discovery(r.commitment, ev.resource);
      if (res.transition == Transition::Discovery) {
        r.commitment = res.next;
        head_to(r, MotionMode::GoToNest, arena_, config_.motion, rng_);
        log(r.id, event::Discovery{ev.resource});
      }
    }
  }
}

void Simulation::update_commitments() {
  if (config_.commitment.p_abandon > 0.0) {
    for (Robot& r : robots_) {
      const auto res = on_abandon(r.commitment, config_.commitment.p_abandon, rng_);
      if (res.transition != Transition::Abandonment) continue;
      log(r.id, event::Abandonment{*resource_of(r.commitment)});
      uncommit(r);
    }
  }

  const std::size_t n = robots_.size();
  const double t = time();
  for (std::size_t i = 0; i < n; ++i) states_[i] = robots_[i].commitment;
  const double comm2 = config_.comm_radius * config_.comm_radius;
  std::vector<RobotId> senders;
  for (std::size_t i = 0; i < n; ++i) {
    Robot& r = robots_[i];
    if (r.area != AreaKind::Nest) {
      beacon_ready_at_[i] = 0.0;
      continue;
    }
    if (t < beacon_ready_at_[i]) continue;
    senders.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && squared_distance(r.pose.position, robots_[j].pose.position) <= comm2) {
        senders.push_back(static_cast<RobotId>(j));
      }
    }
    if (senders.empty()) continue;
    const RobotId sender = senders[rng_.index(senders.size())];
    beacon_ready_at_[i] = t + config_.beacon_refractory_s;
    const Commitment before = r.commitment;
    const auto res = on_beacon(before, states_[sender], config_.commitment, rng_);
    if (res.transition == Transition::Recruitment) {
      r.commitment = res.next;
      head_to(r, MotionMode::GoToResource, arena_, config_.motion, rng_);
      log(r.id, event::Recruitment{*resource_of(res.next), sender});
    } else if (res.transition == Transition::CrossInhibition) {
      log(r.id, event::CrossInhibition{*resource_of(before), sender});
      uncommit(r);
    }
  }
}

void Simulation::play_naming_game() {
  const std::size_t n = robots_.size();
  const double t = time();
  const bool mean_field = config_.mode == Mode::MeanField;

  const std::vector<RobotId>* scripted = nullptr;
  if (script_) {
    const auto it = script_->speakers.find(step_);
    static const std::vector<RobotId> none;
    scripted = it == script_->speakers.end() ? &none : &it->second;
  }

  std::vector<Utterance> utterances;
  std::vector<std::optional<RobotId>> targets;  // mean-field pairwise hearer
  std::vector<bool> speaking(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    Robot& r = robots_[i];
    const bool speaks = scripted ? std::find(scripted->begin(), scripted->end(), r.id) != scripted->end()
                                 : rng_.bernoulli(config_.p_speak);
    if (!speaks) continue;
    const auto u = utter(r, config_.variant, arena_, t, lexicon_, rng_);
    if (!u) continue;
    if (u->created) {
      log(r.id, event::WordCreated{u->word, lexicon_.word(u->word).provenance, CreationTrigger::SelfSpeak,
                                   r.commitment});
    }
    speaking[i] = true;
    utterances.push_back(*u);
    std::optional<RobotId> target;
    if (mean_field && !config_.mean_field_broadcast && n > 1) {
      const std::size_t k = rng_.index(n - 1);
      target = static_cast<RobotId>(k >= i ? k + 1 : k);
    }
    targets.push_back(target);
  }
  if (utterances.empty()) return;

  const double comm2 = config_.comm_radius * config_.comm_radius;
  std::vector<std::vector<Utterance>> inbox(n);
  for (std::size_t u = 0; u < utterances.size(); ++u) {
    const Robot& speaker = robots_[utterances[u].speaker];
    event::Utterance logged{utterances[u].word, speaker.commitment, {}};
    for (std::size_t j = 0; j < n; ++j) {
      if (speaking[j]) continue;
      bool reached = false;
      if (mean_field) {
        reached = config_.mean_field_broadcast || targets[u] == static_cast<RobotId>(j);
      } else {
        reached = squared_distance(speaker.pose.position, robots_[j].pose.position) <= comm2;
      }
      if (!reached) continue;
      inbox[j].push_back(utterances[u]);
      logged.receivers.push_back({static_cast<RobotId>(j), robots_[j].commitment});
    }
    log(speaker.id, std::move(logged));
  }

  for (std::size_t j = 0; j < n; ++j) {
    if (inbox[j].empty()) continue;
    Robot& hearer = robots_[j];
    const auto res = on_hear(hearer, inbox[j], lexicon_, rng_);
    const auto words = hearer.inventory.words();
    log(hearer.id, event::Game{res.heard.speaker, res.heard.word, res.outcome, hearer.commitment,
                               robots_[res.heard.speaker].commitment, std::vector<WordId>(words.begin(), words.end())});
  }
}

void Simulation::bookkeeping() {
  if (plays_game(config_.mode) && !converged_) {
    if (const auto w = lexicon_.consensus(robots_.size())) {
      converged_ = true;
      consensus_ = w;
      log(std::nullopt, event::Convergence{*w});
      if (config_.stop_at_convergence) finished_ = true;
    }
  }
  if (!finished_ && step_ >= max_steps_) {
    finished_ = true;
    if (!converged_) log(std::nullopt, event::Timeout{});
  }
  if (step_ % snapshot_every_ == 0 || finished_) populations_.push_back(take_snapshot(time(), robots_, lexicon_));
  if (!in_warmup() && moves(config_.mode) && step_ % neighborhood_every_ == 0) {
    for (std::size_t i = 0; i < robots_.size(); ++i) {
      positions_[i] = robots_[i].pose.position;
      states_[i] = robots_[i].commitment;
    }
    neighborhoods_.sample(positions_, states_, config_.comm_radius);
  }
}

RunRecord Simulation::run() {
  const auto start = std::chrono::steady_clock::now();
  while (step()) {
  }
  RunRecord record;
  record.config = config_;
  record.events = events_;
  record.populations = populations_;
  record.neighborhoods = neighborhoods_;
  record.converged = converged_;
  record.consensus_word = consensus_;
  record.steps = step_;
  record.t_end = time();
  record.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

RunRecord simulate(const RunConfig& config) { return Simulation(config).run(); }

}  // namespace swarmnaming
