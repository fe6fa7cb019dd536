// dyckzeta: maps, statistics, traces, verification and datasets over Dyck words.

#include "CLI11.hpp"

#include "dyckzeta/dataset.hpp"
#include "dyckzeta/errors.hpp"
#include "dyckzeta/harness.hpp"
#include "dyckzeta/scaffolding.hpp"
#include "dyckzeta/statistics.hpp"
#include "dyckzeta/zeta.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace dyckzeta;

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kUsage = 2;

// Reported with a line number; exit status 2.
struct LineError {
  std::size_t line;
  std::string message;
};

struct WordSource {
  std::vector<std::string> words;
  std::string file;
};

struct Output {
  std::string path;
  std::ofstream file;

  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path, std::ios::binary | std::ios::trunc);
      if (!file) throw ParseError("cannot open output file " + path);
    }
    return file;
  }
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

// Arguments are all validated before any output; streamed input is processed
// line by line. Blank lines are skipped but still counted.
void for_each_word(const WordSource& src, const std::function<void(const DyckWord&)>& fn) {
  if (!src.words.empty()) {
    std::vector<DyckWord> parsed;
    for (std::size_t i = 0; i < src.words.size(); ++i) {
      try {
        parsed.push_back(parse_word(trim(src.words[i])));
      } catch (const ParseError& e) {
        throw LineError{i + 1, e.what()};
      }
    }
    for (const auto& w : parsed) fn(w);
    return;
  }
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!src.file.empty() && src.file != "-") {
    file.open(src.file, std::ios::binary);
    if (!file) throw ParseError("cannot open input file " + src.file);
    in = &file;
  }
  std::string line;
  std::size_t number = 0;
  while (std::getline(*in, line)) {
    ++number;
    const auto text = trim(line);
    if (text.empty()) continue;
    std::optional<DyckWord> w;
    try {
      w = parse_word(text);
    } catch (const ParseError& e) {
      throw LineError{number, e.what()};
    }
    fn(*w);
  }
}

void add_word_source(CLI::App* cmd, WordSource& src) {
  cmd->add_option("words", src.words, "Dyck words ('1' up, '0' down); read from stdin when absent");
  cmd->add_option("--file", src.file, "Read words from a file, one per line ('-' for stdin)");
}

// "8" or "3..10"
std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& part) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw ParseError("invalid semilength range: " + text);
    }
    if (used != part.size()) throw ParseError("invalid semilength range: " + text);
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = to_int(text);
    return {n, n};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!trim(item).empty()) out.emplace_back(trim(item));
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta maps, statistics and exhaustive verification on Dyck words"};
  app.require_subcommand(1);
  Output output;
  app.add_option("--out", output.path, "Write results to this file instead of stdout");

  // map
  WordSource map_src;
  std::string algorithm = "sweep";
  auto* map_cmd = app.add_subcommand("map", "Apply a zeta map to each word");
  map_cmd->add_option("--algorithm", algorithm, "area-vector | sweep | scaffolding | scaffolding-conj")
      ->check(CLI::IsMember({"area-vector", "sweep", "scaffolding", "scaffolding-conj"}));
  add_word_source(map_cmd, map_src);

  // stats
  WordSource stats_src;
  auto* stats_cmd = app.add_subcommand("stats", "Print word,area,bounce,dinv for each word");
  add_word_source(stats_cmd, stats_src);

  // qtcatalan
  int qt_n = 0;
  std::string qt_mode = "area-bounce";
  std::string qt_format = "text";
  auto* qt_cmd = app.add_subcommand("qtcatalan", "q,t-Catalan polynomial by exhaustive enumeration");
  qt_cmd->add_option("n", qt_n, "Semilength (1..14)")->required();
  qt_cmd->add_option("--mode", qt_mode, "area-bounce | dinv-area")
      ->check(CLI::IsMember({"area-bounce", "dinv-area", "area_bounce", "dinv_area"}));
  qt_cmd->add_option("--format", qt_format, "text | json")->check(CLI::IsMember({"text", "json"}));
  int qt_workers = 0;
  qt_cmd->add_option("--workers", qt_workers, "Worker threads (default: all cores)");

  // trace
  std::string trace_word;
  std::string trace_level = "post";
  std::string trace_order = "decreasing";
  std::string trace_peak = "yes";
  std::string trace_spawn = "after";
  std::string trace_format = "json";
  auto* trace_cmd = app.add_subcommand("trace", "Step-by-step scaffolding trace");
  trace_cmd->add_option("word", trace_word, "Dyck word")->required();
  trace_cmd->add_option("--level-convention", trace_level, "post | pre")->check(CLI::IsMember({"post", "pre"}));
  trace_cmd->add_option("--queue-order", trace_order, "decreasing | increasing")
      ->check(CLI::IsMember({"decreasing", "increasing"}));
  trace_cmd->add_option("--peak-in-queue", trace_peak, "yes | no")->check(CLI::IsMember({"yes", "no"}));
  trace_cmd->add_option("--spawn-timing", trace_spawn, "after | before")->check(CLI::IsMember({"after", "before"}));
  trace_cmd->add_option("--format", trace_format, "json | text")->check(CLI::IsMember({"json", "text"}));

  // verify
  std::string verify_range;
  std::string verify_checks = "all";
  int verify_workers = 0;
  std::string report_dir;
  if (const char* env = std::getenv("DYCKZETA_REPORT_DIR")) report_dir = env;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive checks over Dyck(n)");
  verify_cmd->add_option("n", verify_range, "Semilength or inclusive range a..b")->required();
  verify_cmd->add_option("--checks", verify_checks, "Comma-separated check names, or 'all'");
  verify_cmd->add_option("--workers", verify_workers, "Worker threads (default: all cores)");
  verify_cmd->add_option("--report-dir", report_dir, "Write JSON reports and summary.csv here (env DYCKZETA_REPORT_DIR)");
  bool list_checks = false;
  verify_cmd->add_flag("--list", list_checks, "Print the available check names and exit");

  // dataset
  int ds_n = 0;
  std::string ds_map = "sweep";
  std::string ds_format = "csv";
  int ds_workers = 0;
  auto* ds_cmd = app.add_subcommand("dataset", "Emit (word, image) pairs for all of Dyck(n)");
  ds_cmd->add_option("n", ds_n, "Semilength (1..14)")->required();
  ds_cmd->add_option("--map", ds_map, "sweep | scaffolding")->check(CLI::IsMember({"sweep", "scaffolding"}));
  ds_cmd->add_option("--format", ds_format, "csv | tokens")->check(CLI::IsMember({"csv", "tokens"}));
  ds_cmd->add_option("--workers", ds_workers, "Worker threads (default: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*map_cmd) {
      const auto id = parse_map_id(algorithm);
      auto& out = output.stream();
      for_each_word(map_src, [&](const DyckWord& w) { out << apply_map(id, w).str() << '\n'; });
    } else if (*stats_cmd) {
      auto& out = output.stream();
      for_each_word(stats_src, [&](const DyckWord& w) {
        out << w.str() << ',' << area(w) << ',' << bounce(w) << ',' << dinv(w) << '\n';
      });
    } else if (*qt_cmd) {
      const auto poly = qt_catalan(qt_n, parse_qt_mode(qt_mode), qt_workers);
      auto& out = output.stream();
      if (qt_format == "json")
        out << nlohmann::json{{"n", qt_n}, {"mode", to_string(parse_qt_mode(qt_mode))}, {"terms", poly.to_json()}}.dump()
            << '\n';
      else
        out << poly.to_text() << '\n';
    } else if (*trace_cmd) {
      const auto w = [&] {
        try {
          return parse_word(trace_word);
        } catch (const ParseError& e) {
          throw LineError{1, e.what()};
        }
      }();
      MapVariant v;
      v.level_convention = trace_level == "pre" ? LevelConvention::pre_step : LevelConvention::post_step;
      v.queue_order = trace_order == "increasing" ? QueueOrder::increasing : QueueOrder::decreasing;
      v.peak_in_queue = trace_peak == "yes";
      v.spawn_timing = trace_spawn == "before" ? SpawnTiming::before_update : SpawnTiming::after_update;
      const auto run = run_scaffolding(w, v, true);
      auto& out = output.stream();
      if (trace_format == "json") {
        out << trace_to_json(w, v, run.trace, run.out).dump(2) << '\n';
      } else {
        for (const auto& r : run.trace) {
          out << "step " << r.step << " level " << r.current_level << " queue";
          for (int p : r.queue) out << ' ' << p;
          out << " emit " << r.emitted << '\n';
        }
        out << "output " << to_string(run.out) << '\n';
      }
    } else if (*verify_cmd) {
      if (list_checks) {
        for (const auto& name : check_names()) output.stream() << name << '\n';
        return kOk;
      }
      const auto [lo, hi] = parse_range(verify_range);
      const auto specs = make_checks(split_commas(verify_checks), lo, hi);
      const auto suite = run_suite(specs, verify_workers);
      auto& out = output.stream();
      out << csv_header() << ",status\n";
      for (const auto& r : suite.reports)
        out << csv_row(r) << ',' << (r.passed() ? "pass" : (r.spec.must_pass ? "FAIL" : "info")) << '\n';
      if (!report_dir.empty()) write_reports(suite.reports, report_dir);
      return suite.exit_status;
    } else if (*ds_cmd) {
      write_dataset(ds_n, parse_dataset_map(ds_map), parse_dataset_format(ds_format), output.stream(), ds_workers);
    }
    if (output.file.is_open()) output.file.close();
    std::cout.flush();
    return kOk;
  } catch (const LineError& e) {
    std::cerr << "error: line " << e.line << ": " << e.message << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalInvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
}
