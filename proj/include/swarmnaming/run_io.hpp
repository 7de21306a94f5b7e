#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "swarmnaming/simulation.hpp"

namespace swarmnaming {

/// Run directory layout:
///   config.txt               full config echo (key = value)
///   events.jsonl             event log, one JSON object per line
///   populations.csv          population snapshots
///   neighborhood_counts.csv  n_small,scope,k,count
///   run.json                 seed, convergence flag, steps, log digest, wall-clock
void write_run(const RunRecord& record, const std::filesystem::path& dir);

struct StoredRun {
  std::filesystem::path dir;
  RunConfig config;
  std::vector<Event> events;
  NeighborhoodCounts neighborhoods;
};

StoredRun read_run(const std::filesystem::path& dir);

/// Every directory below root (root included) holding an events.jsonl, in
/// lexicographic path order.
std::vector<std::filesystem::path> find_run_dirs(const std::filesystem::path& root);

/// Shortest round-trip decimal form.
std::string format_number(double v);

void write_populations_csv(std::ostream& out, const std::vector<PopulationSnapshot>& snapshots);

}  // namespace swarmnaming
