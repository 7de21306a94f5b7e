#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "swarmnaming/arena.hpp"
#include "swarmnaming/random.hpp"
#include "swarmnaming/robot.hpp"

namespace swarmnaming {

enum class GameVariant : std::uint8_t { Classic, Spatial };
enum class CreationTrigger : std::uint8_t { SelfSpeak, SelfEnterResource };
enum class GameOutcome : std::uint8_t { Success, Failure };

std::string_view to_string(GameVariant v);
std::string_view to_string(CreationTrigger t);
std::string_view to_string(GameOutcome o);

struct Word {
  WordId id;
  Resource provenance = Resource::A;  // closest resource to the creator at creation
  double created_at = 0.0;
  RobotId creator = 0;
  bool creator_committed = false;
  CreationTrigger trigger = CreationTrigger::SelfSpeak;
};

/// Every word created during a run, with the number of inventories holding
/// each. All inventory mutations go through here so that the count of
/// distinct surviving words is maintained incrementally.
class Lexicon {
 public:
  WordId create(Resource provenance, double t, RobotId creator, bool creator_committed, CreationTrigger trigger);

  [[nodiscard]] const Word& word(WordId id) const { return words_.at(id.value); }
  [[nodiscard]] std::span<const Word> words() const { return words_; }
  [[nodiscard]] std::size_t holders(WordId id) const { return holders_.at(id.value); }
  [[nodiscard]] std::size_t distinct_surviving() const { return distinct_; }
  [[nodiscard]] std::size_t total_entries() const { return entries_; }

  /// The shared word when every one of n_robots holds exactly that word.
  [[nodiscard]] std::optional<WordId> consensus(std::size_t n_robots) const;

  /// Surviving words in creation order.
  [[nodiscard]] std::vector<WordId> surviving() const;

  bool add(Inventory& inventory, WordId w);
  void collapse(Inventory& inventory, WordId keep);

 private:
  std::vector<Word> words_;
  std::vector<std::uint32_t> holders_;
  std::size_t distinct_ = 0;
  std::size_t entries_ = 0;
};

struct Utterance {
  RobotId speaker = 0;
  WordId word;
  bool created = false;  // the speaker invented the word just now
};

/// What a chosen speaker says. Classic: an empty inventory invents a word
/// tagged with the resource closest to the speaker. Spatial: an empty
/// inventory stays silent. Otherwise one inventory word drawn uniformly.
std::optional<Utterance> utter(Robot& speaker, GameVariant variant, const Arena& arena, double t, Lexicon& lexicon,
                               Rng& rng);

/// Bernoulli(p_speak) gate in front of utter(). Returns nullopt when the robot
/// does not speak or speaks silently.
std::optional<Utterance> maybe_speak(Robot& robot, GameVariant variant, double p_speak, const Arena& arena, double t,
                                     Lexicon& lexicon, Rng& rng);

/// Spatial-variant word creation on entering a resource with an empty
/// inventory; nothing is broadcast.
std::optional<WordId> on_enter_resource(Robot& robot, Resource resource, GameVariant variant, double t,
                                        Lexicon& lexicon);

struct HearResult {
  Utterance heard;
  GameOutcome outcome = GameOutcome::Failure;
  bool was_empty = false;
};

/// One game as hearer: pick one received utterance uniformly. Known word:
/// collapse the inventory to it. Unknown word: add it.
HearResult on_hear(Robot& hearer, std::span<const Utterance> received, Lexicon& lexicon, Rng& rng);

struct WordSets {
  std::vector<WordId> matching;      // provenance == selected resource
  std::vector<WordId> non_matching;  // provenance == the other resource
};

/// Partition of the surviving words relative to a selected resource.
WordSets word_sets(const Lexicon& lexicon, Resource selected);

}  // namespace swarmnaming
