#pragma once

#include "dyckzeta/scaffolding.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dyckzeta {

enum class CheckKind {
  map_equivalence,    // left(w) == right(w) for every w
  bijection,          // left is injective on Dyck(n) and its inverse table round-trips
  statistic_exchange, // (area, bounce) vs (dinv, area) through left
  qt_table,           // both generating functions agree (and match the known table for n <= 3)
  qt_symmetry,        // q <-> t symmetry and q = t = 1 evaluation
  trace_levels,       // every trace emits each position once, at its own level
  enumeration_count,  // enumeration size and order vs the Catalan formula
  variant_search,     // scaffolding variant grid
};

enum class MapId {
  area_vector,
  sweep,
  sweep_forward,
  sweep_conjugate,
  scaffolding,
  scaffolding_grouped,
  scaffolding_conjugate,
};

/// as_stated: (area, bounce)(w) == (dinv, area)(ζ(w)).
/// precomposed_rc: (area, bounce)(ζ(rc(w))) == (dinv, area)(w).
enum class ExchangeForm { as_stated, precomposed_rc };

std::string_view to_string(CheckKind kind);
std::string_view to_string(MapId map);
std::string_view to_string(ExchangeForm form);
MapId parse_map_id(std::string_view text);
DyckWord apply_map(MapId map, const DyckWord& w);

struct CheckSpec {
  std::string name;
  int n_min = 1;
  int n_max = 1;
  CheckKind kind = CheckKind::map_equivalence;
  MapId left = MapId::sweep;
  MapId right = MapId::sweep;
  ExchangeForm exchange = ExchangeForm::as_stated;
  bool must_pass = true;
};

/// Throws SemilengthOutOfRange if the range is empty or beyond the cap for the kind.
void validate(const CheckSpec& spec);
int max_semilength(CheckKind kind);
int min_semilength(CheckKind kind);

struct CheckReport {
  CheckSpec spec;
  std::uint64_t words_checked = 0;
  std::uint64_t mismatches = 0;
  std::optional<Counterexample> first_counterexample;
  double wall_seconds = 0.0;
  int worker_count = 1;
  nlohmann::json detail; // kind-specific extras (polynomials, variant grid, image size)

  bool passed() const noexcept { return mismatches == 0; }
};

/// Parallel exhaustive check over the spec's range. `workers` <= 0 uses the
/// OpenMP default. Everything except wall_seconds and worker_count is
/// independent of the worker count.
CheckReport run_check(const CheckSpec& spec, int workers = 0);

/// Single-threaded reference implementation of run_check.
CheckReport run_check_serial(const CheckSpec& spec);

/// True when two reports agree on everything but timing and worker count.
bool same_result(const CheckReport& a, const CheckReport& b);

struct SuiteResult {
  std::vector<CheckReport> reports;
  int exit_status = 0; // nonzero iff a must-pass check has mismatches
};

SuiteResult run_suite(const std::vector<CheckSpec>& specs, int workers = 0);

/// Names accepted by `verify --checks`; "all" expands to every entry.
const std::vector<std::string>& check_names();

/// Builds one spec per requested check and per n in [n_min, n_max].
/// With "all", checks whose range excludes some n are skipped for that n.
std::vector<CheckSpec> make_checks(const std::vector<std::string>& names, int n_min, int n_max);

nlohmann::json to_json(const CheckReport& report);
std::string csv_header();
std::string csv_row(const CheckReport& report);

/// Writes one JSON file per report plus summary.csv into `dir`.
void write_reports(const std::vector<CheckReport>& reports, const std::filesystem::path& dir);

} // namespace dyckzeta
