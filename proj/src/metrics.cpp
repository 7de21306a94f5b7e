#include "swarmnaming/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swarmnaming {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool contains(const std::vector<WordId>& words, WordId w) {
  return std::find(words.begin(), words.end(), w) != words.end();
}

std::vector<WordId> sorted(std::vector<WordId> words) {
  std::sort(words.begin(), words.end());
  return words;
}

}  // namespace

// ---------------------------------------------------------------------------

PopulationSnapshot take_snapshot(double t, std::span<const Robot> robots, const Lexicon& lexicon) {
  PopulationSnapshot s;
  s.t = t;
  for (const Robot& r : robots) {
    switch (r.commitment) {
      case Commitment::Uncommitted: ++s.uncommitted; break;
      case Commitment::A: ++s.committed_a; break;
      case Commitment::B: ++s.committed_b; break;
    }
    bool has_a = false;
    bool has_b = false;
    for (const WordId w : r.inventory.words()) {
      (lexicon.word(w).provenance == Resource::A ? has_a : has_b) = true;
    }
    s.knows_a += has_a;
    s.knows_b += has_b;
    s.knows_none += r.inventory.empty();
    if (r.commitment == Commitment::A) {
      s.matching += has_a;
      s.mismatching += has_b;
    } else if (r.commitment == Commitment::B) {
      s.matching += has_b;
      s.mismatching += has_a;
    }
  }
  for (const WordId w : lexicon.surviving()) {
    ++(lexicon.word(w).provenance == Resource::A ? s.words_a : s.words_b);
  }
  return s;
}

bool has_vocabulary_matching(const PopulationSnapshot& s) {
  switch (selected_resource(s.committed_a, s.committed_b)) {
    case Selection::A: return s.words_a > 0 && s.words_b == 0;
    case Selection::B: return s.words_b > 0 && s.words_a == 0;
    case Selection::Tie: return false;
  }
  return false;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Scope s) {
  switch (s) {
    case Scope::Whole: return "whole";
    case Scope::Within: return "within";
    case Scope::Between: return "between";
  }
  return "whole";
}

std::vector<NeighborhoodSize> neighborhood_sizes(std::span<const Vec2> positions, std::span<const Commitment> labels,
                                                 double radius) {
  if (positions.size() != labels.size()) throw std::invalid_argument("neighborhood_sizes: size mismatch");
  const double r2 = radius * radius;
  std::vector<NeighborhoodSize> sizes(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      if (squared_distance(positions[i], positions[j]) > r2) continue;
      ++sizes[i].whole;
      ++sizes[j].whole;
      if (labels[i] == labels[j]) {
        ++sizes[i].within;
        ++sizes[j].within;
      } else {
        ++sizes[i].between;
        ++sizes[j].between;
      }
    }
  }
  return sizes;
}

void NeighborhoodCounts::add(std::size_t n_small, Scope scope, std::size_t k, std::uint64_t count) {
  counts_[{n_small, scope, k}] += count;
}

void NeighborhoodCounts::sample(std::span<const Vec2> positions, std::span<const Commitment> labels, double radius) {
  const auto a = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), Commitment::A));
  const auto b = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), Commitment::B));
  const std::size_t n_small = std::min(a, b);
  for (const auto& s : neighborhood_sizes(positions, labels, radius)) {
    add(n_small, Scope::Whole, s.whole);
    add(n_small, Scope::Within, s.within);
    add(n_small, Scope::Between, s.between);
  }
}

void NeighborhoodCounts::merge(const NeighborhoodCounts& other) {
  for (const auto& [key, count] : other.counts_) counts_[key] += count;
}

std::uint64_t NeighborhoodCounts::total(Scope scope) const {
  std::uint64_t n = 0;
  for (const auto& [key, count] : counts_) {
    if (std::get<1>(key) == scope) n += count;
  }
  return n;
}

double NeighborhoodCounts::mean(Scope scope) const {
  double sum = 0.0;
  std::uint64_t n = 0;
  for (const auto& [key, count] : counts_) {
    if (std::get<1>(key) != scope) continue;
    sum += static_cast<double>(std::get<2>(key)) * static_cast<double>(count);
    n += count;
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

std::optional<std::size_t> NeighborhoodCounts::mode(Scope scope) const {
  std::map<std::size_t, std::uint64_t> by_k;
  for (const auto& [key, count] : counts_) {
    if (std::get<1>(key) == scope) by_k[std::get<2>(key)] += count;
  }
  if (by_k.empty()) return std::nullopt;
  return std::max_element(by_k.begin(), by_k.end(), [](const auto& l, const auto& r) { return l.second < r.second; })
      ->first;
}

std::map<NeighborhoodCounts::Key, double> NeighborhoodCounts::conditional_probabilities() const {
  std::map<std::pair<std::size_t, Scope>, std::uint64_t> totals;
  for (const auto& [key, count] : counts_) totals[{std::get<0>(key), std::get<1>(key)}] += count;
  std::map<Key, double> out;
  for (const auto& [key, count] : counts_) {
    out[key] = static_cast<double>(count) / static_cast<double>(totals[{std::get<0>(key), std::get<1>(key)}]);
  }
  return out;
}

// ---------------------------------------------------------------------------

LogReplay::LogReplay(std::size_t n_robots) : commitments_(n_robots, Commitment::Uncommitted), inventories_(n_robots) {}

std::size_t LogReplay::count(Commitment c) const {
  return static_cast<std::size_t>(std::count(commitments_.begin(), commitments_.end(), c));
}

std::vector<WordId> LogReplay::surviving() const {
  std::vector<WordId> out;
  for (std::size_t i = 0; i < holders_.size(); ++i) {
    if (holders_[i] > 0) out.push_back(WordId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

void LogReplay::add_word(RobotId r, WordId w) {
  auto& inv = inventories_.at(r);
  if (contains(inv, w)) return;
  inv.push_back(w);
  if (holders_.at(w.value)++ == 0) ++distinct_;
}

void LogReplay::set_inventory(RobotId r, std::vector<WordId> words) {
  for (const WordId w : inventories_.at(r)) {
    if (--holders_.at(w.value) == 0) --distinct_;
  }
  inventories_[r].clear();
  for (const WordId w : words) add_word(r, w);
}

void LogReplay::apply(const Event& e) {
  std::visit(overloaded{
                 [&](const event::InitialCommitment& p) { commitments_.at(*e.robot) = committed_to(p.resource); },
                 [&](const event::Discovery& p) { commitments_.at(*e.robot) = committed_to(p.resource); },
                 [&](const event::Recruitment& p) { commitments_.at(*e.robot) = committed_to(p.resource); },
                 [&](const event::CrossInhibition&) { commitments_.at(*e.robot) = Commitment::Uncommitted; },
                 [&](const event::Abandonment&) { commitments_.at(*e.robot) = Commitment::Uncommitted; },
                 [&](const event::WordCreated& p) {
                   if (p.word.value >= provenance_.size()) {
                     provenance_.resize(p.word.value + 1, Resource::A);
                     holders_.resize(p.word.value + 1, 0);
                   }
                   provenance_[p.word.value] = p.provenance;
                   add_word(*e.robot, p.word);
                 },
                 [&](const event::Game& p) { set_inventory(*e.robot, p.inventory); },
                 [](const auto&) {},
             },
             e.payload);
}

// ---------------------------------------------------------------------------

std::string_view to_string(EndClass c) {
  switch (c) {
    case EndClass::OO: return "OO";
    case EndClass::OX: return "OX";
    case EndClass::XO: return "XO";
    case EndClass::XX: return "XX";
  }
  return "OO";
}

std::vector<WeightedClass> classify_end_state(Resource final_provenance, Selection at_convergence,
                                              Resource second_provenance, Selection at_two_words) {
  auto label = [](Resource provenance, Resource selected) { return provenance == selected; };
  auto make = [](bool final_matches, bool second_matches) {
    if (final_matches) return second_matches ? EndClass::OO : EndClass::OX;
    return second_matches ? EndClass::XO : EndClass::XX;
  };
  auto as_resource = [](Selection s) { return s == Selection::A ? Resource::A : Resource::B; };

  std::array<double, 4> weight{};
  if (at_convergence != Selection::Tie && at_two_words != Selection::Tie) {
    weight[static_cast<std::size_t>(make(label(final_provenance, as_resource(at_convergence)),
                                         label(second_provenance, as_resource(at_two_words))))] = 1.0;
  } else {
    for (const Resource hypothetical : {Resource::A, Resource::B}) {
      const Resource o_final = at_convergence == Selection::Tie ? hypothetical : as_resource(at_convergence);
      const Resource o_second = at_two_words == Selection::Tie ? hypothetical : as_resource(at_two_words);
      weight[static_cast<std::size_t>(
          make(label(final_provenance, o_final), label(second_provenance, o_second)))] += 0.5;
    }
  }
  std::vector<WeightedClass> out;
  for (std::size_t i = 0; i < weight.size(); ++i) {
    if (weight[i] > 0.0) out.push_back({static_cast<EndClass>(i), weight[i]});
  }
  return out;
}

std::string_view spread_bin_label(std::size_t bin) {
  static constexpr std::array<std::string_view, kSpreadBins> labels = {"0-10", "10-20", "20-30", "30-40", "40-50"};
  return labels.at(bin);
}

std::optional<std::size_t> spread_bin(std::size_t committed_a, std::size_t committed_b) {
  const std::size_t total = committed_a + committed_b;
  if (total == 0) return std::nullopt;
  const std::size_t minority = std::min(committed_a, committed_b);
  return std::min<std::size_t>((10 * minority) / total, kSpreadBins - 1);
}

EndState detect_end_states(const std::vector<Event>& events, std::size_t n_robots) {
  struct TwoWordStage {
    double t;
    std::vector<WordId> words;
    Selection selection;
  };

  EndState result;
  LogReplay replay(n_robots);
  std::vector<TwoWordStage> stages;  // since the last time more than two words survived

  for (std::size_t i = 0; i < events.size(); ++i) {
    const Event& e = events[i];
    replay.apply(e);
    if (const auto* conv = std::get_if<event::Convergence>(&e.payload)) {
      // commitment changes of this step are logged before the convergence marker
      result.converged = true;
      result.final_word = conv->word;
      result.t_convergence = e.t;
      result.committed_a_at_convergence = replay.count(Commitment::A);
      result.committed_b_at_convergence = replay.count(Commitment::B);
      result.selection_at_convergence = replay.selection();
      break;
    }
    const std::size_t distinct = replay.distinct_surviving();
    if (distinct > 2) {
      stages.clear();
    } else if (distinct == 2) {
      auto words = replay.surviving();
      if (stages.empty() || stages.back().words != words) {
        // selection is read at the end of the step the stage starts in
        std::size_t j = i + 1;
        LogReplay lookahead = replay;
        while (j < events.size() && events[j].t == e.t) lookahead.apply(events[j++]);
        stages.push_back({e.t, std::move(words), lookahead.selection()});
      }
    }
  }

  if (!result.converged) {
    result.excluded = "no convergence before horizon";
    return result;
  }
  const auto stage = std::find_if(stages.begin(), stages.end(), [&](const TwoWordStage& s) {
    return std::find(s.words.begin(), s.words.end(), result.final_word) != s.words.end();
  });
  if (stage == stages.end()) {
    result.excluded = "no two-word stage before convergence";
    return result;
  }
  result.second_word = stage->words[0] == result.final_word ? stage->words[1] : stage->words[0];
  result.t_two_words = stage->t;
  result.selection_at_two_words = stage->selection;
  result.spread = spread_bin(result.committed_a_at_convergence, result.committed_b_at_convergence);
  result.classes = classify_end_state(replay.provenance(result.final_word), result.selection_at_convergence,
                                      replay.provenance(result.second_word), result.selection_at_two_words);
  return result;
}

// ---------------------------------------------------------------------------

std::string_view to_string(OriginTrigger t) { return t == OriginTrigger::Self ? "self" : "received"; }

std::vector<FirstWordOrigin> first_word_origins(const std::vector<Event>& events, std::size_t n_robots) {
  std::vector<FirstWordOrigin> origins;
  std::vector<bool> seen(n_robots, false);
  for (const Event& e : events) {
    if (!e.robot) continue;
    const RobotId r = *e.robot;
    if (r >= n_robots || seen[r]) continue;
    if (const auto* w = std::get_if<event::WordCreated>(&e.payload)) {
      origins.push_back({r, e.t, is_committed(w->creator_state), OriginTrigger::Self});
      seen[r] = true;
    } else if (const auto* g = std::get_if<event::Game>(&e.payload)) {
      // the first game a robot plays with an empty inventory adds a word
      origins.push_back({r, e.t, is_committed(g->hearer_state), OriginTrigger::Received});
      seen[r] = true;
    }
  }
  return origins;
}

std::vector<OriginBin> first_word_origin_series(const std::vector<Event>& events, std::size_t n_robots,
                                                double bin_width) {
  if (bin_width <= 0.0) throw std::invalid_argument("bin_width must be positive");
  const auto origins = first_word_origins(events, n_robots);
  std::size_t n_bins = 0;
  for (const auto& o : origins) n_bins = std::max(n_bins, static_cast<std::size_t>(o.t / bin_width) + 1);
  std::vector<std::array<std::uint64_t, 4>> counts(n_bins, std::array<std::uint64_t, 4>{});
  for (const auto& o : origins) {
    counts[static_cast<std::size_t>(o.t / bin_width)][(o.committed ? 2 : 0) + (o.trigger == OriginTrigger::Received)]++;
  }
  std::vector<OriginBin> series;
  for (std::size_t b = 0; b < n_bins; ++b) {
    for (std::size_t c = 0; c < 4; ++c) {
      series.push_back({static_cast<double>(b) * bin_width, c >= 2,
                        (c % 2) == 1 ? OriginTrigger::Received : OriginTrigger::Self, counts[b][c]});
    }
  }
  return series;
}

// ---------------------------------------------------------------------------

std::vector<InteractionBin> interaction_tally(const std::vector<Event>& events, double bin_width) {
  if (bin_width <= 0.0) throw std::invalid_argument("bin_width must be positive");
  std::vector<InteractionBin> bins;
  auto bin_at = [&](double t) -> InteractionBin& {
    const auto b = static_cast<std::size_t>(t / bin_width);
    while (bins.size() <= b) bins.push_back({static_cast<double>(bins.size()) * bin_width, 0, 0, 0});
    return bins[b];
  };
  std::map<RobotId, Resource> last_committed;
  auto commit = [&](const Event& e, Resource r, bool counts_as_exchange) {
    const auto it = last_committed.find(*e.robot);
    if (counts_as_exchange && it != last_committed.end() && it->second != r) bin_at(e.t).exchanges++;
    last_committed[*e.robot] = r;
  };
  for (const Event& e : events) {
    std::visit(overloaded{
                   [&](const event::InitialCommitment& p) { commit(e, p.resource, false); },
                   [&](const event::Discovery& p) { commit(e, p.resource, true); },
                   [&](const event::Recruitment& p) { commit(e, p.resource, true); },
                   [&](const event::Utterance& p) {
                     auto& bin = bin_at(e.t);
                     if (!is_committed(p.speaker_state)) return;
                     for (const auto& r : p.receivers) {
                       if (!is_committed(r.state)) continue;
                       (r.state == p.speaker_state ? bin.within : bin.between)++;
                     }
                   },
                   [&](const event::Timeout&) { bin_at(e.t); },
                   [&](const event::Convergence&) { bin_at(e.t); },
                   [](const auto&) {},
               },
               e.payload);
  }
  return bins;
}

// ---------------------------------------------------------------------------

AuditReport audit_run(const std::vector<Event>& events, std::span<const PopulationSnapshot> snapshots,
                      std::size_t n_robots, double warmup_s) {
  AuditReport report;
  LogReplay replay(n_robots);
  for (const Event& e : events) {
    const bool activity = !std::holds_alternative<event::InitialCommitment>(e.payload) &&
                          !std::holds_alternative<event::Timeout>(e.payload) &&
                          !std::holds_alternative<event::Convergence>(e.payload);
    if (activity && e.t <= warmup_s) ++report.warmup_violations;

    if (const auto* w = std::get_if<event::WordCreated>(&e.payload)) {
      if (replay.known(w->word)) ++report.provenance_violations;
      if (!replay.inventory(*e.robot).empty()) ++report.game_law_violations;
    } else if (const auto* u = std::get_if<event::Utterance>(&e.payload)) {
      if (!replay.known(u->word)) ++report.provenance_violations;
    } else if (const auto* g = std::get_if<event::Game>(&e.payload)) {
      ++report.games;
      if (!replay.known(g->word)) {
        ++report.provenance_violations;
      } else {
        auto before = replay.inventory(*e.robot);
        const bool known = contains(before, g->word);
        std::vector<WordId> expected;
        if (known) {
          expected = {g->word};
        } else {
          expected = before;
          expected.push_back(g->word);
        }
        const GameOutcome expected_outcome = known ? GameOutcome::Success : GameOutcome::Failure;
        if (g->outcome != expected_outcome || sorted(expected) != sorted(g->inventory)) {
          ++report.game_law_violations;
        }
      }
    }
    replay.apply(e);
  }
  for (const auto& s : snapshots) {
    if (s.uncommitted + s.committed_a + s.committed_b != n_robots) ++report.conservation_violations;
  }
  return report;
}

}  // namespace swarmnaming
