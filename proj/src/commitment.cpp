#include "swarmnaming/commitment.hpp"

namespace swarmnaming {

std::string_view to_string(Selection s) {
  switch (s) {
    case Selection::A: return "A";
    case Selection::B: return "B";
    case Selection::Tie: return "tie";
  }
  return "tie";
}

TransitionResult on_discovery(Commitment current, Resource found) {
  if (is_committed(current)) return {current, Transition::None};
  return {committed_to(found), Transition::Discovery};
}

TransitionResult on_beacon(Commitment hearer, Commitment sender, const CommitmentParams& params, Rng& rng) {
  if (!is_committed(sender) || hearer == sender) return {hearer, Transition::None};
  if (!is_committed(hearer)) {
    if (rng.bernoulli(params.p_recruit)) return {sender, Transition::Recruitment};
    return {hearer, Transition::None};
  }
  if (rng.bernoulli(params.p_cross_inhibit)) return {Commitment::Uncommitted, Transition::CrossInhibition};
  return {hearer, Transition::None};
}

TransitionResult on_abandon(Commitment current, double p_abandon, Rng& rng) {
  if (!is_committed(current)) return {current, Transition::None};
  if (rng.bernoulli(p_abandon)) return {Commitment::Uncommitted, Transition::Abandonment};
  return {current, Transition::None};
}

}  // namespace swarmnaming
