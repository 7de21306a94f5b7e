#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swarmnaming/batch.hpp"
#include "swarmnaming/config.hpp"
#include "swarmnaming/run_io.hpp"
#include "swarmnaming/simulation.hpp"

namespace fs = std::filesystem;
using namespace swarmnaming;

namespace {

RunConfig base_config(const std::string& path, const std::vector<std::string>& overrides) {
  RunConfig config = path.empty() ? RunConfig{} : load_config(path);
  for (const auto& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError(kv, "override must look like key=value");
    set_config_value(config, kv.substr(0, eq), kv.substr(eq + 1));
  }
  validate(config);
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Foraging swarm naming-game simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::string out;

  auto* sim = app.add_subcommand("simulate", "Run one simulation and write its run directory");
  std::uint64_t seed = 0;
  sim->add_option("--config", config_path, "key = value config file")->check(CLI::ExistingFile);
  sim->add_option("--set", overrides, "Override a config key, key=value (repeatable)");
  auto* seed_opt = sim->add_option("--seed", seed, "Random seed (overrides the config)");
  sim->add_option("--out", out, "Run directory")->required();

  auto* batch = app.add_subcommand("batch", "Run seeds x sweep cells and summarize");
  std::size_t seeds = 0;
  std::vector<std::string> sweeps;
  std::size_t jobs = 1;
  bool no_summary = false;
  batch->add_option("--config", config_path, "key = value config file")->check(CLI::ExistingFile);
  batch->add_option("--set", overrides, "Override a config key, key=value (repeatable)");
  batch->add_option("--seeds", seeds, "Number of seeds per cell, starting at the config seed")->required();
  batch->add_option("--sweep", sweeps, "key=v1,v2,... (repeatable)");
  batch->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  batch->add_flag("--no-summary", no_summary, "Skip the summary step");
  batch->add_option("--out", out, "Output directory")->required();

  auto* summ = app.add_subcommand("summarize", "Aggregate stored runs into CSV tables");
  std::string in;
  SummaryOptions summary_options;
  summ->add_option("--in", in, "Directory holding run directories")->required()->check(CLI::ExistingDirectory);
  summ->add_option("--out", out, "Output directory")->required();
  summ->add_option("--origin-bin", summary_options.origin_bin_s, "First-word origin bin width, s")
      ->check(CLI::PositiveNumber);
  summ->add_option("--interaction-bin", summary_options.interaction_bin_s, "Interaction bin width, s")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) {
      RunConfig config = base_config(config_path, overrides);
      if (*seed_opt) config.seed = seed;
      const RunRecord record = simulate(config);
      write_run(record, out);
      std::cout << "seed " << config.seed << (record.converged ? " converged" : " not converged") << " at t = "
                << format_number(record.t_end) << " s, " << record.events.size() << " events -> " << out << "\n";
    } else if (*batch) {
      const RunConfig config = base_config(config_path, overrides);
      std::vector<SweepAxis> axes;
      for (const auto& s : sweeps) axes.push_back(parse_sweep(s));
      const auto status = run_batch(config, seeds, axes, out, BatchOptions{jobs, !no_summary});
      std::size_t failed = 0;
      for (const auto& s : status) {
        if (!s.ok) {
          ++failed;
          std::cerr << s.run_id << ": " << s.error << "\n";
        }
      }
      std::cout << status.size() << " runs, " << failed << " failed -> " << out << "\n";
      if (failed > 0) return 1;
    } else if (*summ) {
      const auto counts = summarize(in, out, summary_options);
      std::cout << counts.runs << " runs, " << counts.converged << " converged, " << counts.classified
                << " classified -> " << out << "\n";
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
