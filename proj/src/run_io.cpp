#include "swarmnaming/run_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace swarmnaming {
namespace fs = std::filesystem;

namespace {

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

Scope parse_scope(const std::string& s) {
  if (s == "whole") return Scope::Whole;
  if (s == "within") return Scope::Within;
  if (s == "between") return Scope::Between;
  throw std::runtime_error("bad scope '" + s + "'");
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_populations_csv(std::ostream& out, const std::vector<PopulationSnapshot>& snapshots) {
  out << "t,uncommitted,committed_a,committed_b,knows_a,knows_b,knows_none,matching,mismatching,words_a,words_b\n";
  for (const auto& s : snapshots) {
    out << format_number(s.t) << ',' << s.uncommitted << ',' << s.committed_a << ',' << s.committed_b << ','
        << s.knows_a << ',' << s.knows_b << ',' << s.knows_none << ',' << s.matching << ',' << s.mismatching << ','
        << s.words_a << ',' << s.words_b << '\n';
  }
}

void write_run(const RunRecord& record, const fs::path& dir) {
  fs::create_directories(dir);
  {
    auto out = open_out(dir / "config.txt");
    out << to_config_text(record.config);
  }
  {
    auto out = open_out(dir / "events.jsonl");
    write_event_log(out, record.events);
  }
  {
    auto out = open_out(dir / "populations.csv");
    write_populations_csv(out, record.populations);
  }
  {
    auto out = open_out(dir / "neighborhood_counts.csv");
    out << "n_small,scope,k,count\n";
    for (const auto& [key, count] : record.neighborhoods.counts()) {
      out << std::get<0>(key) << ',' << to_string(std::get<1>(key)) << ',' << std::get<2>(key) << ',' << count << '\n';
    }
  }
  {
    nlohmann::ordered_json j;
    j["seed"] = record.config.seed;
    j["converged"] = record.converged;
    if (record.consensus_word) {
      j["consensus_word"] = record.consensus_word->value;
    } else {
      j["consensus_word"] = nullptr;
    }
    j["steps"] = record.steps;
    j["t_end"] = record.t_end;
    j["event_log_digest"] = event_log_digest(record.events);
    j["wall_seconds"] = record.wall_seconds;
    auto out = open_out(dir / "run.json");
    out << j.dump(2) << '\n';
  }
}

StoredRun read_run(const fs::path& dir) {
  StoredRun run;
  run.dir = dir;
  run.config = load_config((dir / "config.txt").string());
  {
    std::ifstream in(dir / "events.jsonl");
    if (!in) throw std::runtime_error("missing events.jsonl in '" + dir.string() + "'");
    run.events = read_event_log(in);
  }
  std::ifstream in(dir / "neighborhood_counts.csv");
  if (in) {
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::stringstream ss(line);
      std::string n_small, scope, k, count;
      std::getline(ss, n_small, ',');
      std::getline(ss, scope, ',');
      std::getline(ss, k, ',');
      std::getline(ss, count, ',');
      run.neighborhoods.add(std::stoul(n_small), parse_scope(scope), std::stoul(k), std::stoull(count));
    }
  }
  return run;
}

std::vector<fs::path> find_run_dirs(const fs::path& root) {
  std::vector<fs::path> dirs;
  if (!fs::exists(root)) return dirs;
  if (fs::exists(root / "events.jsonl")) dirs.push_back(root);
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_directory() && fs::exists(entry.path() / "events.jsonl")) dirs.push_back(entry.path());
  }
  std::sort(dirs.begin(), dirs.end());
  return dirs;
}

}  // namespace swarmnaming
