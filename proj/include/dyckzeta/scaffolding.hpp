#pragma once

#include "dyckzeta/dyck_word.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dyckzeta {

enum class LevelConvention { post_step, pre_step };
enum class QueueOrder { decreasing, increasing };
enum class SpawnTiming { after_update, before_update };

/// Knobs for the places where the agent procedure admits more than one reading.
struct MapVariant {
  LevelConvention level_convention = LevelConvention::post_step;
  QueueOrder queue_order = QueueOrder::decreasing;
  bool peak_in_queue = true;
  SpawnTiming spawn_timing = SpawnTiming::after_update;

  friend bool operator==(const MapVariant&, const MapVariant&) = default;

  /// All 16 combinations; the default variant comes first.
  static std::array<MapVariant, 16> all();
  std::string label() const;
};

nlohmann::json to_json(const MapVariant& v);
MapVariant variant_from_json(const nlohmann::json& j);

/// One iteration of the agent loop. Positions are 1-based.
struct TraceRecord {
  int step = 0;
  int current_level = 0;
  std::vector<int> queue; // emission order
  std::string emitted;
  std::vector<int> agents_before;
  std::vector<int> agents_after;
  std::vector<int> spawned;
};

/// Agent state of a running scaffolding map. Agents and right steps are
/// bitmasks over positions 1..2n.
class ScaffoldState {
public:
  ScaffoldState(const DyckWord& w, const MapVariant& variant);

  bool done() const noexcept { return static_cast<int>(out_.size()) >= word_.length(); }
  int iterations() const noexcept { return iterations_; }
  int current_level() const noexcept { return current_level_; }
  std::vector<int> agents() const;
  const BinarySequence& out() const noexcept { return out_; }

  /// Runs one iteration; throws DuplicateAgent on collision.
  TraceRecord step();

private:
  std::uint64_t peaks_at(int level) const;

  DyckWord word_;
  MapVariant variant_;
  std::uint64_t right_ = 0;  // down-step positions
  std::uint64_t valid_ = 0;  // positions 1..2n
  std::vector<std::pair<int, std::uint64_t>> peaks_; // (level, mask), descending level
  std::uint64_t agents_ = 0;
  int current_level_ = 0;
  int iterations_ = 0;
  BinarySequence out_;
};

struct ScaffoldRun {
  BinarySequence out;
  std::vector<TraceRecord> trace;
};

/// Runs the agent loop to completion without validating the output.
/// Throws DuplicateAgent, or NonTermination after 2n+1 iterations.
ScaffoldRun run_scaffolding(const DyckWord& w, const MapVariant& variant = {}, bool record_trace = false);

/// Scaffolding map; the output is checked to be a Dyck word of semilength n.
DyckWord scaffolding(const DyckWord& w, const MapVariant& variant = {});

/// Closed form of the default variant: for c = max level down to 0, the steps
/// whose post-step height is c, right to left.
DyckWord scaffolding_grouped(const DyckWord& w);

/// rc(scaffolding(rc(w))).
DyckWord scaffolding_conjugate(const DyckWord& w);

std::vector<TraceRecord> trace_scaffolding(const DyckWord& w, const MapVariant& variant = {});

nlohmann::json trace_to_json(const DyckWord& input, const MapVariant& variant,
                             const std::vector<TraceRecord>& steps, const BinarySequence& output);

struct Counterexample {
  std::string input;
  std::string expected;
  std::string actual;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VariantOutcome {
  MapVariant variant;
  std::uint64_t words = 0;
  std::uint64_t invalid = 0; // error, wrong length or non-Dyck output
  std::optional<Counterexample> first_invalid;
  std::uint64_t zeta_mismatches = 0;
  std::optional<Counterexample> first_zeta_mismatch;
  std::uint64_t conjugate_mismatches = 0;
  std::optional<Counterexample> first_conjugate_mismatch;

  bool always_valid() const noexcept { return invalid == 0; }
  bool matches_zeta() const noexcept { return zeta_mismatches == 0; }
  bool matches_conjugate() const noexcept { return conjugate_mismatches == 0; }
};

struct VariantSearchReport {
  int n = 0;
  std::vector<VariantOutcome> outcomes;
};

inline constexpr int kMinVariantSearch = 2;
inline constexpr int kMaxVariantSearch = 10;

/// Runs every MapVariant over Dyck(n), 2 <= n <= 10, comparing with
/// zeta_sweep and with rc∘zeta_sweep∘rc.
VariantSearchReport variant_search(int n);

nlohmann::json to_json(const VariantSearchReport& report);

} // namespace dyckzeta
