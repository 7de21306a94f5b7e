#include "swarmnaming/batch.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "swarmnaming/metrics.hpp"
#include "swarmnaming/run_io.hpp"

namespace swarmnaming {
namespace fs = std::filesystem;

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::ofstream open_out(const fs::path& path) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

std::string cell_of(const fs::path& in_dir, const fs::path& run_dir) {
  if (run_dir == in_dir) return "";
  const fs::path parent = run_dir.parent_path();
  if (parent == in_dir) return "";
  return parent.lexically_relative(in_dir).generic_string();
}

std::string run_id_of(const fs::path& in_dir, const fs::path& run_dir) {
  if (run_dir == in_dir) return run_dir.filename().generic_string();
  return run_dir.lexically_relative(in_dir).generic_string();
}

/// Accumulated per-group time series and neighborhood counts.
struct GroupSeries {
  std::size_t runs = 0;
  NeighborhoodCounts neighborhoods;
  std::map<std::tuple<std::size_t, bool, OriginTrigger>, std::uint64_t> origins;
  std::size_t origin_bins = 0;
  std::vector<InteractionBin> interactions;

  void add(const StoredRun& run, const SummaryOptions& opt) {
    ++runs;
    neighborhoods.merge(run.neighborhoods);
    for (const auto& b : first_word_origin_series(run.events, run.config.n_robots, opt.origin_bin_s)) {
      const auto idx = static_cast<std::size_t>(std::llround(b.t_bin / opt.origin_bin_s));
      origins[{idx, b.committed, b.trigger}] += b.count;
      origin_bins = std::max(origin_bins, idx + 1);
    }
    const auto tally = interaction_tally(run.events, opt.interaction_bin_s);
    if (interactions.size() < tally.size()) {
      for (std::size_t i = interactions.size(); i < tally.size(); ++i) {
        interactions.push_back({static_cast<double>(i) * opt.interaction_bin_s, 0, 0, 0});
      }
    }
    for (std::size_t i = 0; i < tally.size(); ++i) {
      interactions[i].within += tally[i].within;
      interactions[i].between += tally[i].between;
      interactions[i].exchanges += tally[i].exchanges;
    }
  }

  void write(const fs::path& dir, const SummaryOptions& opt) const {
    {
      auto out = open_out(dir / "neighborhood.csv");
      out << "n_small,scope,k,probability\n";
      for (const auto& [key, p] : neighborhoods.conditional_probabilities()) {
        out << std::get<0>(key) << ',' << to_string(std::get<1>(key)) << ',' << std::get<2>(key) << ','
            << format_number(p) << '\n';
      }
    }
    {
      auto out = open_out(dir / "origins.csv");
      out << "t_bin,committed,trigger,rate\n";
      const double norm = runs == 0 ? 1.0 : static_cast<double>(runs) * opt.origin_bin_s;
      for (std::size_t b = 0; b < origin_bins; ++b) {
        for (const bool committed : {false, true}) {
          for (const OriginTrigger trig : {OriginTrigger::Self, OriginTrigger::Received}) {
            const auto it = origins.find({b, committed, trig});
            const double count = it == origins.end() ? 0.0 : static_cast<double>(it->second);
            out << format_number(static_cast<double>(b) * opt.origin_bin_s) << ',' << (committed ? 1 : 0) << ','
                << to_string(trig) << ',' << format_number(count / norm) << '\n';
          }
        }
      }
    }
    {
      auto out = open_out(dir / "interactions.csv");
      out << "t_bin,within,between,exchanges\n";
      const double norm = runs == 0 ? 1.0 : static_cast<double>(runs);
      for (const auto& b : interactions) {
        out << format_number(b.t_bin) << ',' << format_number(static_cast<double>(b.within) / norm) << ','
            << format_number(static_cast<double>(b.between) / norm) << ','
            << format_number(static_cast<double>(b.exchanges) / norm) << '\n';
      }
    }
  }
};

}  // namespace

SweepAxis parse_sweep(std::string_view spec) {
  const auto eq = spec.find('=');
  if (eq == std::string_view::npos || eq == 0 || eq + 1 == spec.size()) {
    throw std::invalid_argument("sweep '" + std::string(spec) + "' is not of the form key=v1,v2,...");
  }
  SweepAxis axis{std::string(spec.substr(0, eq)), split(spec.substr(eq + 1), ',')};
  RunConfig probe;
  for (const auto& v : axis.values) set_config_value(probe, axis.key, v);  // rejects unknown keys early
  return axis;
}

std::vector<BatchCell> expand_sweep(const RunConfig& base, const std::vector<SweepAxis>& axes) {
  std::vector<BatchCell> cells{{"", base}};
  for (const auto& axis : axes) {
    std::vector<BatchCell> next;
    for (const auto& cell : cells) {
      for (const auto& value : axis.values) {
        BatchCell c = cell;
        set_config_value(c.config, axis.key, value);
        if (!c.label.empty()) c.label += '_';
        c.label += axis.key + '-' + get_config_value(c.config, axis.key);
        next.push_back(std::move(c));
      }
    }
    cells = std::move(next);
  }
  for (const auto& c : cells) validate(c.config);
  return cells;
}

std::vector<BatchRunStatus> run_batch(const RunConfig& base, std::size_t n_seeds, const std::vector<SweepAxis>& axes,
                                      const fs::path& out, const BatchOptions& options) {
  struct Job {
    std::string run_id;
    fs::path dir;
    RunConfig config;
  };
  std::vector<Job> jobs;
  for (const auto& cell : expand_sweep(base, axes)) {
    for (std::size_t s = 0; s < n_seeds; ++s) {
      RunConfig config = cell.config;
      config.seed = base.seed + s;
      const std::string name = "seed-" + std::to_string(config.seed);
      const fs::path rel = cell.label.empty() ? fs::path(name) : fs::path(cell.label) / name;
      jobs.push_back({rel.generic_string(), out / "runs" / rel, config});
    }
  }
  fs::create_directories(out / "runs");

  auto statuses = parallel_map(jobs, options.jobs, [](const Job& job) {
    BatchRunStatus status;
    status.run_id = job.run_id;
    status.seed = job.config.seed;
    try {
      const RunRecord record = simulate(job.config);
      write_run(record, job.dir);
      status.ok = true;
      status.converged = record.converged;
      status.t_end = record.t_end;
    } catch (const std::exception& ex) {
      status.error = ex.what();
    }
    return status;
  });

  {
    auto csv = open_out(out / "runs.csv");
    csv << "run_id,seed,status,converged,t_end,error\n";
    for (const auto& s : statuses) {
      std::string error = s.error;
      std::replace(error.begin(), error.end(), ',', ';');
      std::replace(error.begin(), error.end(), '\n', ' ');
      csv << s.run_id << ',' << s.seed << ',' << (s.ok ? "ok" : "failed") << ',' << (s.converged ? 1 : 0) << ','
          << format_number(s.t_end) << ',' << error << '\n';
    }
  }
  if (options.summarize) summarize(out / "runs", out / "summary");
  return statuses;
}

SummaryCounts summarize(const fs::path& in_dir, const fs::path& out_dir, const SummaryOptions& options) {
  if (!fs::exists(in_dir)) throw std::runtime_error("input directory '" + in_dir.string() + "' does not exist");
  fs::create_directories(out_dir);
  SummaryCounts counts;

  auto end_states = open_out(out_dir / "end_states.csv");
  end_states << "run_id,seed,variant,p_speak,p_sigma,end_state,weight,spread_bin,t_two_words,t_convergence\n";

  // (variant, p_speak, p_sigma) -> (spread bin label, end state) -> weight
  using GroupKey = std::tuple<std::string, std::string, std::string>;
  std::map<GroupKey, std::map<std::pair<std::string, std::string>, double>> histogram;

  GroupSeries all;
  std::map<std::string, GroupSeries> by_cell;

  for (const auto& dir : find_run_dirs(in_dir)) {
    const StoredRun run = read_run(dir);
    ++counts.runs;
    const std::string run_id = run_id_of(in_dir, dir);
    const std::string variant(to_string(run.config.variant));
    const std::string p_speak = format_number(run.config.p_speak);
    const std::string p_sigma = format_number(run.config.commitment.p_cross_inhibit);
    const std::string prefix =
        run_id + ',' + std::to_string(run.config.seed) + ',' + variant + ',' + p_speak + ',' + p_sigma + ',';
    auto& hist = histogram[{variant, p_speak, p_sigma}];

    const EndState es = detect_end_states(run.events, run.config.n_robots);
    if (es.converged) ++counts.converged;
    if (es.excluded) {
      const std::string label = es.converged ? "unclassified" : "unconverged";
      end_states << prefix << label << ",0,,,";
      if (es.converged) end_states << format_number(es.t_convergence);
      end_states << '\n';
      hist[{"all", label}] += 1.0;
    } else {
      ++counts.classified;
      const std::string bin = es.spread ? std::string(spread_bin_label(*es.spread)) : "";
      for (const auto& wc : es.classes) {
        end_states << prefix << to_string(wc.end_class) << ',' << format_number(wc.weight) << ',' << bin << ','
                   << format_number(es.t_two_words) << ',' << format_number(es.t_convergence) << '\n';
        hist[{"all", std::string(to_string(wc.end_class))}] += wc.weight;
        if (!bin.empty()) hist[{bin, std::string(to_string(wc.end_class))}] += wc.weight;
      }
    }

    all.add(run, options);
    const std::string cell = cell_of(in_dir, dir);
    if (!cell.empty()) by_cell[cell].add(run, options);
  }

  {
    auto out = open_out(out_dir / "end_state_histogram.csv");
    out << "variant,p_speak,p_sigma,spread_bin,end_state,weight\n";
    for (const auto& [key, cells] : histogram) {
      for (const auto& [bin_state, weight] : cells) {
        out << std::get<0>(key) << ',' << std::get<1>(key) << ',' << std::get<2>(key) << ',' << bin_state.first << ','
            << bin_state.second << ',' << format_number(weight) << '\n';
      }
    }
  }
  all.write(out_dir, options);
  for (const auto& [cell, series] : by_cell) series.write(out_dir / cell, options);
  return counts;
}

}  // namespace swarmnaming
