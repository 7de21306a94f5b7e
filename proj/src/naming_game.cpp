#include "swarmnaming/naming_game.hpp"

#include <stdexcept>

namespace swarmnaming {

std::string_view to_string(GameVariant v) { return v == GameVariant::Classic ? "classic" : "spatial"; }

std::string_view to_string(CreationTrigger t) {
  return t == CreationTrigger::SelfSpeak ? "self_speak" : "self_enter_resource";
}

std::string_view to_string(GameOutcome o) { return o == GameOutcome::Success ? "success" : "failure"; }

WordId Lexicon::create(Resource provenance, double t, RobotId creator, bool creator_committed,
                       CreationTrigger trigger) {
  const WordId id{static_cast<std::uint32_t>(words_.size())};
  words_.push_back(Word{id, provenance, t, creator, creator_committed, trigger});
  holders_.push_back(0);
  return id;
}

std::optional<WordId> Lexicon::consensus(std::size_t n_robots) const {
  if (distinct_ != 1 || entries_ != n_robots) return std::nullopt;
  for (std::size_t i = 0; i < holders_.size(); ++i) {
    if (holders_[i] > 0) return WordId{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

std::vector<WordId> Lexicon::surviving() const {
  std::vector<WordId> out;
  for (std::size_t i = 0; i < holders_.size(); ++i) {
    if (holders_[i] > 0) out.push_back(WordId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

bool Lexicon::add(Inventory& inventory, WordId w) {
  if (!inventory.add(w)) return false;
  if (holders_.at(w.value)++ == 0) ++distinct_;
  ++entries_;
  return true;
}

void Lexicon::collapse(Inventory& inventory, WordId keep) {
  if (!inventory.contains(keep)) throw std::logic_error("collapse to a word the inventory does not hold");
  for (const WordId w : inventory.words()) {
    if (w == keep) continue;
    if (--holders_[w.value] == 0) --distinct_;
    --entries_;
  }
  inventory.clear();
  inventory.add(keep);
}

std::optional<Utterance> utter(Robot& speaker, GameVariant variant, const Arena& arena, double t, Lexicon& lexicon,
                               Rng& rng) {
  if (speaker.inventory.empty()) {
    if (variant == GameVariant::Spatial) return std::nullopt;
    const Resource provenance = arena.closest_resource(speaker.pose.position, rng);
    const WordId w =
        lexicon.create(provenance, t, speaker.id, is_committed(speaker.commitment), CreationTrigger::SelfSpeak);
    lexicon.add(speaker.inventory, w);
    return Utterance{speaker.id, w, true};
  }
  const auto words = speaker.inventory.words();
  return Utterance{speaker.id, words[rng.index(words.size())], false};
}

std::optional<Utterance> maybe_speak(Robot& robot, GameVariant variant, double p_speak, const Arena& arena, double t,
                                     Lexicon& lexicon, Rng& rng) {
  if (!rng.bernoulli(p_speak)) return std::nullopt;
  return utter(robot, variant, arena, t, lexicon, rng);
}

std::optional<WordId> on_enter_resource(Robot& robot, Resource resource, GameVariant variant, double t,
                                        Lexicon& lexicon) {
  if (variant != GameVariant::Spatial || !robot.inventory.empty()) return std::nullopt;
  const WordId w =
      lexicon.create(resource, t, robot.id, is_committed(robot.commitment), CreationTrigger::SelfEnterResource);
  lexicon.add(robot.inventory, w);
  return w;
}

HearResult on_hear(Robot& hearer, std::span<const Utterance> received, Lexicon& lexicon, Rng& rng) {
  if (received.empty()) throw std::invalid_argument("on_hear needs at least one utterance");
  HearResult result;
  result.heard = received[rng.index(received.size())];
  result.was_empty = hearer.inventory.empty();
  if (hearer.inventory.contains(result.heard.word)) {
    lexicon.collapse(hearer.inventory, result.heard.word);
    result.outcome = GameOutcome::Success;
  } else {
    lexicon.add(hearer.inventory, result.heard.word);
    result.outcome = GameOutcome::Failure;
  }
  return result;
}

WordSets word_sets(const Lexicon& lexicon, Resource selected) {
  WordSets sets;
  for (const WordId w : lexicon.surviving()) {
    (lexicon.word(w).provenance == selected ? sets.matching : sets.non_matching).push_back(w);
  }
  return sets;
}

}  // namespace swarmnaming
