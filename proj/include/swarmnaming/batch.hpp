#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "swarmnaming/config.hpp"
#include "swarmnaming/simulation.hpp"

namespace swarmnaming {

/// One swept key and its values, parsed from "key=v1,v2,...".
struct SweepAxis {
  std::string key;
  std::vector<std::string> values;
};

SweepAxis parse_sweep(std::string_view spec);

struct BatchCell {
  std::string label;  // directory-safe, e.g. "p_speak-0.001_variant-spatial"; empty without sweep
  RunConfig config;
};

/// Cartesian product of the axes applied on top of base, axes varying
/// slowest-first. Every cell config is validated.
std::vector<BatchCell> expand_sweep(const RunConfig& base, const std::vector<SweepAxis>& axes);

/// Applies fn to every item on up to `jobs` threads. Results keep input
/// order, so the output does not depend on the concurrency level.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& items, std::size_t jobs, Fn fn)
    -> std::vector<decltype(fn(std::declval<const In&>()))> {
  using Out = decltype(fn(std::declval<const In&>()));
  std::vector<std::optional<Out>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n_threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, items.size()));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Out> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct BatchRunStatus {
  std::string run_id;  // "<cell>/seed-<seed>"
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  bool converged = false;
  double t_end = 0.0;
};

struct BatchOptions {
  std::size_t jobs = 1;
  bool summarize = true;
};

/// Runs every cell for seeds base.seed + 0 .. n_seeds-1. Each run writes to
/// out/runs/<cell>/seed-<seed>/; a failing run is recorded in out/runs.csv and
/// does not stop the batch. With summarize set, out/summary/ is produced.
std::vector<BatchRunStatus> run_batch(const RunConfig& base, std::size_t n_seeds, const std::vector<SweepAxis>& axes,
                                      const std::filesystem::path& out, const BatchOptions& options = {});

struct SummaryOptions {
  double origin_bin_s = 100.0;
  double interaction_bin_s = 100.0;
};

struct SummaryCounts {
  std::size_t runs = 0;
  std::size_t converged = 0;
  std::size_t classified = 0;
};

/// Reads every run below in_dir and writes end_states.csv,
/// end_state_histogram.csv, neighborhood.csv, origins.csv and
/// interactions.csv to out_dir, plus the last three per cell in
/// out_dir/<cell>/ when runs are grouped in cell directories.
SummaryCounts summarize(const std::filesystem::path& in_dir, const std::filesystem::path& out_dir,
                        const SummaryOptions& options = {});

}  // namespace swarmnaming
