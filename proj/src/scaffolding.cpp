#include "dyckzeta/scaffolding.hpp"

#include "dyckzeta/enumerate.hpp"
#include "dyckzeta/errors.hpp"
#include "dyckzeta/zeta.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace dyckzeta {

namespace {

std::vector<int> positions_of(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

const char* name(LevelConvention c) { return c == LevelConvention::post_step ? "post_step" : "pre_step"; }
const char* name(QueueOrder o) { return o == QueueOrder::decreasing ? "decreasing" : "increasing"; }
const char* name(SpawnTiming s) { return s == SpawnTiming::after_update ? "after_update" : "before_update"; }

template <typename Enum>
Enum parse_enum(const std::string& text, Enum a, Enum b) {
  if (text == name(a)) return a;
  if (text == name(b)) return b;
  throw ParseError("unknown variant value: " + text);
}

std::string describe(const std::exception& e) { return std::string("error: ") + e.what(); }

} // namespace

std::array<MapVariant, 16> MapVariant::all() {
  std::array<MapVariant, 16> out{};
  std::size_t k = 0;
  for (auto level : {LevelConvention::post_step, LevelConvention::pre_step})
    for (auto order : {QueueOrder::decreasing, QueueOrder::increasing})
      for (bool peak : {true, false})
        for (auto spawn : {SpawnTiming::after_update, SpawnTiming::before_update})
          out[k++] = MapVariant{level, order, peak, spawn};
  return out;
}

std::string MapVariant::label() const {
  return std::string(name(level_convention)) + "/" + name(queue_order) + "/" +
         (peak_in_queue ? "peak_in_queue" : "peak_not_in_queue") + "/" + name(spawn_timing);
}

nlohmann::json to_json(const MapVariant& v) {
  return {{"level_convention", name(v.level_convention)},
          {"queue_order", name(v.queue_order)},
          {"peak_in_queue", v.peak_in_queue ? "yes" : "no"},
          {"spawn_timing", name(v.spawn_timing)}};
}

MapVariant variant_from_json(const nlohmann::json& j) {
  MapVariant v;
  v.level_convention = parse_enum(j.at("level_convention").get<std::string>(), LevelConvention::post_step,
                                  LevelConvention::pre_step);
  v.queue_order = parse_enum(j.at("queue_order").get<std::string>(), QueueOrder::decreasing, QueueOrder::increasing);
  const auto peak = j.at("peak_in_queue").get<std::string>();
  if (peak != "yes" && peak != "no") throw ParseError("peak_in_queue must be yes or no");
  v.peak_in_queue = peak == "yes";
  v.spawn_timing =
      parse_enum(j.at("spawn_timing").get<std::string>(), SpawnTiming::after_update, SpawnTiming::before_update);
  return v;
}

ScaffoldState::ScaffoldState(const DyckWord& w, const MapVariant& variant) : word_(w), variant_(variant) {
  const int len = w.length();
  std::map<int, std::uint64_t, std::greater<>> by_level;
  int h = 0;
  for (int i = 1; i <= len; ++i) {
    const int pre = h;
    h += w.step(i) ? 1 : -1;
    valid_ |= std::uint64_t{1} << i;
    if (w.step(i) == 0) right_ |= std::uint64_t{1} << i;
    if (i < len && w.step(i) == 1 && w.step(i + 1) == 0) {
      const int key = variant.level_convention == LevelConvention::post_step ? h : pre;
      by_level[key] |= std::uint64_t{1} << i;
    }
  }
  peaks_.assign(by_level.begin(), by_level.end());
  current_level_ = peaks_.front().first;
  out_.reserve(static_cast<std::size_t>(len));
}

std::uint64_t ScaffoldState::peaks_at(int level) const {
  for (const auto& [l, mask] : peaks_)
    if (l == level) return mask;
  return 0;
}

std::vector<int> ScaffoldState::agents() const { return positions_of(agents_); }

TraceRecord ScaffoldState::step() {
  TraceRecord rec;
  rec.step = ++iterations_;
  rec.current_level = current_level_;
  rec.agents_before = positions_of(agents_);

  const std::uint64_t peak_mask = peaks_at(current_level_);
  std::uint64_t queue = agents_;
  if (variant_.peak_in_queue) {
    if (const auto overlap = agents_ & peak_mask)
      throw DuplicateAgent(std::countr_zero(overlap), current_level_);
    queue |= peak_mask;
  }
  rec.queue = positions_of(queue);
  if (variant_.queue_order == QueueOrder::decreasing) std::reverse(rec.queue.begin(), rec.queue.end());
  for (int p : rec.queue) {
    const auto s = static_cast<std::uint8_t>(word_.step(p));
    out_.push_back(s);
    rec.emitted.push_back(s ? '1' : '0');
  }

  auto move = [this](std::uint64_t mask) {
    const std::uint64_t right_movers = ((mask & right_) << 1) & right_ & valid_;
    const std::uint64_t left_movers = ((mask & ~right_ & valid_) >> 1) & ~right_ & valid_;
    return right_movers | left_movers;
  };
  auto spawn = [&] {
    for (int j : positions_of(peak_mask)) {
      for (int p : {j + 1, j - 1}) {
        const std::uint64_t bit = std::uint64_t{1} << p;
        const bool ok = p == j + 1 ? (right_ & bit) != 0 : (valid_ & bit) != 0 && (right_ & bit) == 0;
        if (!ok) continue;
        if (agents_ & bit) throw DuplicateAgent(p, current_level_);
        agents_ |= bit;
        rec.spawned.push_back(p);
      }
    }
  };

  if (variant_.spawn_timing == SpawnTiming::after_update) {
    agents_ = move(agents_);
    spawn();
  } else {
    spawn();
    agents_ = move(agents_);
  }
  rec.agents_after = positions_of(agents_);
  --current_level_;
  return rec;
}

ScaffoldRun run_scaffolding(const DyckWord& w, const MapVariant& variant, bool record_trace) {
  ScaffoldState state(w, variant);
  ScaffoldRun run;
  const int limit = w.length() + 1;
  while (!state.done()) {
    if (state.iterations() >= limit) throw NonTermination(limit);
    auto rec = state.step();
    if (record_trace) run.trace.push_back(std::move(rec));
  }
  run.out = state.out();
  return run;
}

DyckWord scaffolding(const DyckWord& w, const MapVariant& variant) {
  const auto run = run_scaffolding(w, variant);
  if (run.out.size() != static_cast<std::size_t>(w.length()))
    throw InternalInvariantViolation("scaffolding emitted " + std::to_string(run.out.size()) + " steps for " + w.str());
  std::uint32_t bits = 0;
  for (auto s : run.out) bits = (bits << 1) | s;
  if (!DyckWord::is_dyck(bits, w.semilength()))
    throw InternalInvariantViolation("scaffolding produced non-Dyck word " + to_string(run.out) + " from " + w.str());
  return unchecked_word(bits, w.semilength());
}

DyckWord scaffolding_grouped(const DyckWord& w) {
  const int len = w.length();
  std::array<int, 2 * kMaxSemilength + 1> level{};
  int h = 0, top = 0;
  for (int j = 1; j <= len; ++j) {
    h += w.step(j) ? 1 : -1;
    level[static_cast<std::size_t>(j)] = h;
    top = std::max(top, h);
  }
  std::uint32_t out = 0;
  for (int c = top; c >= 0; --c)
    for (int j = len; j >= 1; --j)
      if (level[static_cast<std::size_t>(j)] == c) out = (out << 1) | static_cast<std::uint32_t>(w.step(j));
  if (!DyckWord::is_dyck(out, w.semilength()))
    throw InternalInvariantViolation("grouped scaffolding produced a non-Dyck word from " + w.str());
  return unchecked_word(out, w.semilength());
}

DyckWord scaffolding_conjugate(const DyckWord& w) { return rev_complement(scaffolding(rev_complement(w))); }

std::vector<TraceRecord> trace_scaffolding(const DyckWord& w, const MapVariant& variant) {
  return run_scaffolding(w, variant, true).trace;
}

nlohmann::json trace_to_json(const DyckWord& input, const MapVariant& variant,
                             const std::vector<TraceRecord>& steps, const BinarySequence& output) {
  auto arr = nlohmann::json::array();
  for (const auto& r : steps)
    arr.push_back({{"step", r.step},
                   {"level", r.current_level},
                   {"queue", r.queue},
                   {"emitted", r.emitted},
                   {"agents_before", r.agents_before},
                   {"agents_after", r.agents_after},
                   {"spawned", r.spawned}});
  return {{"input", input.str()}, {"variant", to_json(variant)}, {"steps", arr}, {"output", to_string(output)}};
}

VariantSearchReport variant_search(int n) {
  if (n < kMinVariantSearch || n > kMaxVariantSearch) throw SemilengthOutOfRange(n, kMinVariantSearch, kMaxVariantSearch);
  VariantSearchReport report;
  report.n = n;
  for (const auto& v : MapVariant::all()) {
    VariantOutcome o;
    o.variant = v;
    report.outcomes.push_back(o);
  }

  for (const auto& w : enumerate(n)) {
    const auto zeta = zeta_sweep(w).str();
    const auto conj = zeta_sweep_conjugate(w).str();
    for (auto& o : report.outcomes) {
      ++o.words;
      std::string actual;
      bool valid = false;
      try {
        const auto run = run_scaffolding(w, o.variant);
        actual = to_string(run.out);
        std::uint32_t bits = 0;
        for (auto s : run.out) bits = (bits << 1) | s;
        valid = run.out.size() == static_cast<std::size_t>(w.length()) && DyckWord::is_dyck(bits, n);
      } catch (const InternalInvariantViolation& e) {
        actual = describe(e);
      }
      if (!valid && o.invalid++ == 0) o.first_invalid = Counterexample{w.str(), "Dyck word of length " + std::to_string(2 * n), actual};
      if (actual != zeta && o.zeta_mismatches++ == 0) o.first_zeta_mismatch = Counterexample{w.str(), zeta, actual};
      if (actual != conj && o.conjugate_mismatches++ == 0)
        o.first_conjugate_mismatch = Counterexample{w.str(), conj, actual};
    }
  }
  return report;
}

namespace {

nlohmann::json to_json(const std::optional<Counterexample>& c) {
  if (!c) return nullptr;
  return {{"input", c->input}, {"expected", c->expected}, {"actual", c->actual}};
}

} // namespace

nlohmann::json to_json(const VariantSearchReport& report) {
  auto arr = nlohmann::json::array();
  for (const auto& o : report.outcomes)
    arr.push_back({{"variant", to_json(o.variant)},
                   {"label", o.variant.label()},
                   {"words", o.words},
                   {"always_valid", o.always_valid()},
                   {"invalid", o.invalid},
                   {"first_invalid", to_json(o.first_invalid)},
                   {"matches_zeta", o.matches_zeta()},
                   {"zeta_mismatches", o.zeta_mismatches},
                   {"first_zeta_mismatch", to_json(o.first_zeta_mismatch)},
                   {"matches_conjugate", o.matches_conjugate()},
                   {"conjugate_mismatches", o.conjugate_mismatches},
                   {"first_conjugate_mismatch", to_json(o.first_conjugate_mismatch)}});
  return {{"n", report.n}, {"variants", arr}};
}

} // namespace dyckzeta
