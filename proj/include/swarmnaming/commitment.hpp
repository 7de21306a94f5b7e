#pragma once

#include <cstdint>
#include <string_view>

#include "swarmnaming/random.hpp"
#include "swarmnaming/robot.hpp"

namespace swarmnaming {

struct CommitmentParams {
  double p_recruit = 0.7;        // per processed beacon
  double p_cross_inhibit = 0.7;  // per processed beacon
  double p_abandon = 0.0;        // per step
};

enum class Transition : std::uint8_t { None, Discovery, Recruitment, CrossInhibition, Abandonment };

struct TransitionResult {
  Commitment next = Commitment::Uncommitted;
  Transition transition = Transition::None;
};

/// Stumbling on a resource commits an uncommitted robot to it. Committed
/// robots are unaffected.
TransitionResult on_discovery(Commitment current, Resource found);

/// Applies one beacon to a nest-located hearer. An uncommitted hearer is
/// recruited to the sender's resource with p_recruit; a hearer committed to
/// the other resource is cross-inhibited to uncommitted with p_cross_inhibit.
/// Beacons from uncommitted senders or same-resource senders change nothing
/// and consume no randomness.
TransitionResult on_beacon(Commitment hearer, Commitment sender, const CommitmentParams& params, Rng& rng);

TransitionResult on_abandon(Commitment current, double p_abandon, Rng& rng);

enum class Selection : std::uint8_t { A, B, Tie };

std::string_view to_string(Selection s);

/// The resource with more committed robots.
constexpr Selection selected_resource(std::size_t count_a, std::size_t count_b) {
  if (count_a > count_b) return Selection::A;
  if (count_b > count_a) return Selection::B;
  return Selection::Tie;
}

}  // namespace swarmnaming
