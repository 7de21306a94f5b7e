#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "swarmnaming/commitment.hpp"
#include "swarmnaming/events.hpp"
#include "swarmnaming/naming_game.hpp"
#include "swarmnaming/robot.hpp"

namespace swarmnaming {

// ---------------------------------------------------------------------------
// Population partitions

struct PopulationSnapshot {
  double t = 0.0;
  std::size_t uncommitted = 0;
  std::size_t committed_a = 0;
  std::size_t committed_b = 0;
  std::size_t knows_a = 0;     // robots holding at least one word of W_A
  std::size_t knows_b = 0;     // robots holding at least one word of W_B
  std::size_t knows_none = 0;  // empty inventories
  std::size_t matching = 0;    // committed robots knowing a word of their own resource
  std::size_t mismatching = 0; // committed robots knowing a word of the other resource
  std::size_t words_a = 0;     // distinct surviving words of W_A
  std::size_t words_b = 0;
  friend bool operator==(const PopulationSnapshot&, const PopulationSnapshot&) = default;
};

PopulationSnapshot take_snapshot(double t, std::span<const Robot> robots, const Lexicon& lexicon);

/// No committed robot holds a word from the other resource.
constexpr bool is_polarised(const PopulationSnapshot& s) { return s.mismatching == 0; }
/// Only selected-resource words survive.
bool has_vocabulary_matching(const PopulationSnapshot& s);
/// At least one surviving word per resource.
constexpr bool has_vocabulary_completeness(const PopulationSnapshot& s) { return s.words_a > 0 && s.words_b > 0; }

// ---------------------------------------------------------------------------
// Neighborhoods

enum class Scope : std::uint8_t { Whole, Within, Between };
std::string_view to_string(Scope s);

struct NeighborhoodSize {
  std::size_t whole = 0;
  std::size_t within = 0;   // neighbors sharing the robot's label
  std::size_t between = 0;  // neighbors with a different label
};

/// Neighbor counts within radius (inclusive) for every robot. Labels are
/// sub-population tags; uncommitted robots form their own label.
std::vector<NeighborhoodSize> neighborhood_sizes(std::span<const Vec2> positions, std::span<const Commitment> labels,
                                                 double radius);

/// Histogram of neighborhood sizes keyed by (smallest sub-population size,
/// scope, k).
class NeighborhoodCounts {
 public:
  using Key = std::tuple<std::size_t, Scope, std::size_t>;

  void add(std::size_t n_small, Scope scope, std::size_t k, std::uint64_t count = 1);
  /// Samples one configuration; n_small = min(|P_A|, |P_B|) from labels.
  void sample(std::span<const Vec2> positions, std::span<const Commitment> labels, double radius);
  void merge(const NeighborhoodCounts& other);

  [[nodiscard]] const std::map<Key, std::uint64_t>& counts() const { return counts_; }
  [[nodiscard]] bool empty() const { return counts_.empty(); }
  [[nodiscard]] std::uint64_t total(Scope scope) const;
  [[nodiscard]] double mean(Scope scope) const;
  [[nodiscard]] std::optional<std::size_t> mode(Scope scope) const;
  /// P(|N| = k | n_small) per (n_small, scope).
  [[nodiscard]] std::map<Key, double> conditional_probabilities() const;

 private:
  std::map<Key, std::uint64_t> counts_;
};

// ---------------------------------------------------------------------------
// Log replay

/// Reconstructs commitments, inventories and the surviving word set of a run
/// from its event log alone.
class LogReplay {
 public:
  explicit LogReplay(std::size_t n_robots);

  void apply(const Event& e);

  [[nodiscard]] std::size_t count(Commitment c) const;
  [[nodiscard]] Selection selection() const {
    return selected_resource(count(Commitment::A), count(Commitment::B));
  }
  [[nodiscard]] Commitment commitment(RobotId r) const { return commitments_.at(r); }
  [[nodiscard]] const std::vector<WordId>& inventory(RobotId r) const { return inventories_.at(r); }
  [[nodiscard]] std::size_t distinct_surviving() const { return distinct_; }
  [[nodiscard]] std::vector<WordId> surviving() const;
  [[nodiscard]] Resource provenance(WordId w) const { return provenance_.at(w.value); }
  [[nodiscard]] bool known(WordId w) const { return w.value < provenance_.size(); }
  [[nodiscard]] std::size_t n_robots() const { return commitments_.size(); }

 private:
  void add_word(RobotId r, WordId w);
  void set_inventory(RobotId r, std::vector<WordId> words);

  std::vector<Commitment> commitments_;
  std::vector<std::vector<WordId>> inventories_;
  std::vector<Resource> provenance_;
  std::vector<std::uint32_t> holders_;
  std::size_t distinct_ = 0;
};

// ---------------------------------------------------------------------------
// End states

enum class EndClass : std::uint8_t { OO, OX, XO, XX };
std::string_view to_string(EndClass c);

struct WeightedClass {
  EndClass end_class;
  double weight;
  friend bool operator==(const WeightedClass&, const WeightedClass&) = default;
};

/// Labels the last word (against the selection at convergence) and the
/// second-last word (against the selection when two words remained). A tie
/// splits the run evenly over both possible selections, with one shared
/// hypothetical selection when both times are tied.
std::vector<WeightedClass> classify_end_state(Resource final_provenance, Selection at_convergence,
                                              Resource second_provenance, Selection at_two_words);

constexpr std::size_t kSpreadBins = 5;
std::string_view spread_bin_label(std::size_t bin);

/// Share of committed robots on the non-selected resource, binned as
/// [0,10) [10,20) [20,30) [30,40) [40,50]%. nullopt when nobody is committed.
std::optional<std::size_t> spread_bin(std::size_t committed_a, std::size_t committed_b);

struct EndState {
  bool converged = false;
  std::optional<std::string> excluded;  // reason the run is not classified
  WordId final_word;
  WordId second_word;
  double t_two_words = 0.0;
  double t_convergence = 0.0;
  Selection selection_at_two_words = Selection::Tie;
  Selection selection_at_convergence = Selection::Tie;
  std::size_t committed_a_at_convergence = 0;
  std::size_t committed_b_at_convergence = 0;
  std::optional<std::size_t> spread;
  std::vector<WeightedClass> classes;
};

/// Pure function of the event log.
EndState detect_end_states(const std::vector<Event>& events, std::size_t n_robots);

// ---------------------------------------------------------------------------
// First-word origins

enum class OriginTrigger : std::uint8_t { Self, Received };
std::string_view to_string(OriginTrigger t);

struct FirstWordOrigin {
  RobotId robot = 0;
  double t = 0.0;
  bool committed = false;
  OriginTrigger trigger = OriginTrigger::Self;
  friend bool operator==(const FirstWordOrigin&, const FirstWordOrigin&) = default;
};

std::vector<FirstWordOrigin> first_word_origins(const std::vector<Event>& events, std::size_t n_robots);

struct OriginBin {
  double t_bin = 0.0;
  bool committed = false;
  OriginTrigger trigger = OriginTrigger::Self;
  std::uint64_t count = 0;
};

/// Counts per time bin for the four {committed, uncommitted} x {self,
/// received} categories; every category appears in every bin up to the last
/// origin.
std::vector<OriginBin> first_word_origin_series(const std::vector<Event>& events, std::size_t n_robots,
                                                double bin_width);

// ---------------------------------------------------------------------------
// Interaction loads

struct InteractionBin {
  double t_bin = 0.0;
  std::uint64_t within = 0;     // committed speaker -> hearer on the same resource
  std::uint64_t between = 0;    // committed speaker -> hearer on the other resource
  std::uint64_t exchanges = 0;  // robots re-committing to a different resource
};

std::vector<InteractionBin> interaction_tally(const std::vector<Event>& events, double bin_width);

// ---------------------------------------------------------------------------
// Log audits

struct AuditReport {
  std::size_t games = 0;
  std::size_t game_law_violations = 0;
  std::size_t provenance_violations = 0;  // a word id created twice or used before creation
  std::size_t warmup_violations = 0;      // activity logged during warm-up
  std::size_t conservation_violations = 0;
};

/// Replays the log and checks the naming-game update rules, word-set
/// disjointness and warm-up silence. Snapshots are checked for
/// |P_U| + |P_A| + |P_B| = N.
AuditReport audit_run(const std::vector<Event>& events, std::span<const PopulationSnapshot> snapshots,
                      std::size_t n_robots, double warmup_s);

}  // namespace swarmnaming
