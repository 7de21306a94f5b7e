#include <doctest.h>

#include <sstream>

#include "swarmnaming/config.hpp"

using namespace swarmnaming;

namespace {

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string error_key(const std::string& text) {
  try {
    (void)parse(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "";
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("defaults") {
  const RunConfig c;
  CHECK(c.n_robots == 50);
  CHECK(c.area_radius == 0.3);
  CHECK(c.nest_distance == 2.5);
  CHECK(c.comm_radius == 0.2);
  CHECK(c.motion.dt == 0.1);
  CHECK(c.motion.speed == 0.1);
  CHECK(c.motion.turn_sigma == 0.3);
  CHECK(c.motion.avoid_radius == 0.1);
  CHECK(c.motion.p_return == 5e-4);
  CHECK(c.warmup_s == 200.0);
  CHECK(c.horizon_s == 12000.0);
  CHECK(c.commitment.p_recruit == 0.7);
  CHECK(c.commitment.p_abandon == 0.0);
  CHECK_NOTHROW(validate(c));
}

TEST_CASE("parsing") {
  const RunConfig c = parse(
      "# spatial run\n"
      "variant = spatial\n"
      "mode=commitment_only   # trailing comment\n"
      "\n"
      "  p_speak = 0.0006\n"
      "p_cross_inhibit = 0.1\n"
      "seed = 18446744073709551615\n");
  CHECK(c.variant == GameVariant::Spatial);
  CHECK(c.mode == Mode::CommitmentOnly);
  CHECK(c.p_speak == 0.0006);
  CHECK(c.commitment.p_cross_inhibit == 0.1);
  CHECK(c.seed == 18446744073709551615ULL);
  CHECK(c.n_robots == 50);
}

TEST_CASE("errors name the offending key") {
  CHECK(error_key("p_speek = 0.1\n") == "p_speek");
  CHECK(error_key("p_speak = 1.5\n") == "p_speak");
  CHECK(error_key("p_recruit = -0.1\n") == "p_recruit");
  CHECK(error_key("n_robots = many\n") == "n_robots");
  CHECK(error_key("variant = quantum\n") == "variant");
  CHECK(error_key("horizon_s = 100\n") == "horizon_s");
  CHECK(error_key("mode = locked\nlocked_n = 51\n") == "locked_n");
  CHECK(error_key("mode = mean_field\nvariant = spatial\n") == "variant");
  CHECK(error_key("arrival_radius = 0.001\n") == "arrival_radius");
  CHECK(error_key("waypoint_spread = 2\n") == "waypoint_spread");
  CHECK(error_key("seed\n") != "");
  CHECK(error_key("p_speak = 0.001 extra\n") == "p_speak");
}

TEST_CASE("text form round-trips every key") {
  RunConfig c;
  c.variant = GameVariant::Spatial;
  c.mode = Mode::Locked;
  c.locked_n = 7;
  c.p_speak = 0.0003;
  c.motion.turn_sigma = 0.25;
  c.seed = 123456789;
  c.stop_at_convergence = false;
  const RunConfig back = parse(to_config_text(c));
  for (const auto& key : config_keys()) {
    CHECK_MESSAGE(get_config_value(back, key) == get_config_value(c, key), key);
  }
}

TEST_CASE("set and get") {
  RunConfig c;
  set_config_value(c, "p_cross_inhibit", "0.1");
  CHECK(get_config_value(c, "p_cross_inhibit") == "0.1");
  set_config_value(c, "stop_at_convergence", "false");
  CHECK_FALSE(c.stop_at_convergence);
  CHECK_THROWS_AS(set_config_value(c, "nope", "1"), ConfigError);
  CHECK_THROWS_AS(get_config_value(c, "nope"), ConfigError);
}

}
