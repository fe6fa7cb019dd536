#include "dyckzeta/harness.hpp"

#include "dyckzeta/enumerate.hpp"
#include "dyckzeta/errors.hpp"
#include "dyckzeta/statistics.hpp"
#include "dyckzeta/zeta.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dyckzeta {

namespace {

constexpr std::uint64_t kChunkSize = 1 << 13;
constexpr int kMaxExhaustive = 14;

struct Partial {
  std::uint64_t words = 0;
  std::uint64_t mismatches = 0;
  std::optional<Counterexample> first;

  void record(std::optional<Counterexample> c) {
    ++words;
    if (c) {
      if (!first) first = std::move(c);
      ++mismatches;
    }
  }
  // `later` must come after *this in lexicographic input order.
  void merge(const Partial& later) {
    words += later.words;
    mismatches += later.mismatches;
    if (!first && later.first) first = later.first;
  }
};

struct Execution {
  bool parallel = false;
  int workers = 1;
};

int resolve_workers(int workers) {
#ifdef _OPENMP
  return workers > 0 ? workers : omp_get_max_threads();
#else
  (void)workers;
  return 1;
#endif
}

// Applies `eval` to every word of Dyck(n); results merge in lexicographic order.
template <typename Eval>
Partial for_each_word(int n, const Execution& exec, Eval&& eval) {
  if (!exec.parallel) {
    Partial p;
    for (const auto& w : enumerate(n)) p.record(eval(w));
    return p;
  }
  const auto chunks = make_chunks(n, kChunkSize);
  std::vector<Partial> partial(chunks.size());
  const auto count = static_cast<std::ptrdiff_t>(chunks.size());
#pragma omp parallel for schedule(dynamic) num_threads(exec.workers)
  for (std::ptrdiff_t c = 0; c < count; ++c) {
    auto& acc = partial[static_cast<std::size_t>(c)];
    for (const auto& w : DyckEnumeration(chunks[static_cast<std::size_t>(c)])) acc.record(eval(w));
  }
  Partial total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

// Map outputs indexed by lexicographic rank of the input.
template <typename Map>
std::vector<std::uint32_t> images_by_rank(int n, const Execution& exec, Map&& map) {
  std::vector<std::uint32_t> images(static_cast<std::size_t>(catalan_u64(n)));
  if (!exec.parallel) {
    std::size_t r = 0;
    for (const auto& w : enumerate(n)) images[r++] = map(w);
    return images;
  }
  const auto chunks = make_chunks(n, kChunkSize);
  const auto count = static_cast<std::ptrdiff_t>(chunks.size());
#pragma omp parallel for schedule(dynamic) num_threads(exec.workers)
  for (std::ptrdiff_t c = 0; c < count; ++c) {
    const auto& chunk = chunks[static_cast<std::size_t>(c)];
    auto r = static_cast<std::size_t>(chunk.begin);
    for (const auto& w : DyckEnumeration(chunk)) images[r++] = map(w);
  }
  return images;
}

std::string pair_text(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

std::optional<Counterexample> guarded(const DyckWord& w, auto&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return Counterexample{w.str(), "no error", std::string("error: ") + e.what()};
  }
}

std::optional<Counterexample> check_equivalence(const CheckSpec& spec, const DyckWord& w) {
  return guarded(w, [&]() -> std::optional<Counterexample> {
    const auto actual = apply_map(spec.left, w);
    const auto expected = apply_map(spec.right, w);
    if (actual == expected) return std::nullopt;
    return Counterexample{w.str(), expected.str(), actual.str()};
  });
}

std::optional<Counterexample> check_exchange(const CheckSpec& spec, const DyckWord& w) {
  return guarded(w, [&]() -> std::optional<Counterexample> {
    std::string expected, actual;
    if (spec.exchange == ExchangeForm::as_stated) {
      const auto z = apply_map(spec.left, w);
      expected = pair_text(area(w), bounce(w));
      actual = pair_text(dinv(z), area(z));
    } else {
      const auto z = apply_map(spec.left, rev_complement(w));
      expected = pair_text(dinv(w), area(w));
      actual = pair_text(area(z), bounce(z));
    }
    if (expected == actual) return std::nullopt;
    return Counterexample{w.str(), expected, actual};
  });
}

std::optional<Counterexample> check_trace(const DyckWord& w) {
  return guarded(w, [&]() -> std::optional<Counterexample> {
    const auto lv = levels(w);
    const auto trace = trace_scaffolding(w);
    std::vector<int> seen(static_cast<std::size_t>(w.length() + 1), 0);
    std::string emitted;
    for (const auto& rec : trace) {
      emitted += rec.emitted;
      for (int p : rec.queue) {
        ++seen[static_cast<std::size_t>(p)];
        if (lv.at(p) != rec.current_level)
          return Counterexample{w.str(), "position " + std::to_string(p) + " at level " + std::to_string(lv.at(p)),
                                "emitted at level " + std::to_string(rec.current_level)};
      }
    }
    for (int p = 1; p <= w.length(); ++p)
      if (seen[static_cast<std::size_t>(p)] != 1)
        return Counterexample{w.str(), "position " + std::to_string(p) + " emitted once",
                              "emitted " + std::to_string(seen[static_cast<std::size_t>(p)]) + " times"};
    const auto grouped = scaffolding_grouped(w).str();
    if (emitted != grouped) return Counterexample{w.str(), grouped, emitted};
    return std::nullopt;
  });
}

Partial run_bijection(const CheckSpec& spec, int n, const Execution& exec, nlohmann::json& detail) {
  std::uint64_t invalid = 0;
  auto images = images_by_rank(n, exec, [&](const DyckWord& w) -> std::uint32_t {
    try {
      return apply_map(spec.left, w).bits();
    } catch (const Error&) {
      return 0; // never a Dyck word; counted below
    }
  });

  // Scan in rank order so the first counterexample is the smallest input.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> by_image; // (image, rank)
  by_image.reserve(images.size());
  for (std::uint32_t r = 0; r < images.size(); ++r) by_image.emplace_back(images[r], r);
  std::sort(by_image.begin(), by_image.end());

  // For each rank: the smaller-ranked input sharing its image, if any.
  std::vector<std::int64_t> collides_with(images.size(), -1);
  for (std::size_t i = 1; i < by_image.size(); ++i)
    if (by_image[i].first == by_image[i - 1].first)
      collides_with[by_image[i].second] =
          collides_with[by_image[i - 1].second] >= 0 ? collides_with[by_image[i - 1].second] : by_image[i - 1].second;

  Partial p;
  std::uint64_t distinct = 0;
  for (std::size_t i = 0; i < by_image.size(); ++i)
    if (i == 0 || by_image[i].first != by_image[i - 1].first) ++distinct;

  std::size_t r = 0;
  for (const auto& w : enumerate(n)) {
    const auto image = images[r];
    std::optional<Counterexample> c;
    if (!DyckWord::is_dyck(image, n)) {
      c = Counterexample{w.str(), "Dyck word", "invalid output"};
      ++invalid;
    } else if (collides_with[r] >= 0) {
      const auto other = unrank(n, static_cast<std::uint64_t>(collides_with[r]));
      c = Counterexample{w.str(), "unique image", unchecked_word(image, n).str() + " shared with " + other.str()};
    }
    p.record(std::move(c));
    ++r;
  }

  detail["image_size"] = distinct;
  detail["invalid_outputs"] = invalid;

  if (p.mismatches == 0 && spec.left == MapId::sweep) {
    // Round-trip through the materialized inverse, both directions.
    const auto table = inverse_zeta(n);
    Partial trip = for_each_word(n, exec, [&](const DyckWord& w) -> std::optional<Counterexample> {
      const auto back = table(zeta_sweep(w));
      if (back != w) return Counterexample{w.str(), w.str(), back.str()};
      const auto forward = zeta_sweep(table(w));
      if (forward != w) return Counterexample{w.str(), w.str(), forward.str()};
      return std::nullopt;
    });
    detail["inverse_round_trips"] = trip.words;
    p.mismatches += trip.mismatches;
    if (!p.first) p.first = trip.first;
  }
  return p;
}

QTPolynomial known_qt_catalan(int n) {
  QTPolynomial p;
  switch (n) {
  case 1: p.add(0, 0, 1); break;
  case 2: p.add(1, 0, 1); p.add(0, 1, 1); break;
  case 3:
    p.add(3, 0, 1); p.add(2, 1, 1); p.add(1, 1, 1); p.add(1, 2, 1); p.add(0, 3, 1);
    break;
  default: break;
  }
  return p;
}

std::string monomial_text(int q, int t) {
  QTPolynomial m;
  m.add(q, t, 1);
  return m.to_text();
}

// Counts monomials where `actual` differs from `expected`.
void compare_polynomials(const QTPolynomial& expected, const QTPolynomial& actual, Partial& p) {
  std::vector<QTPolynomial::Monomial> keys;
  for (const auto& [m, c] : expected.terms()) keys.push_back(m);
  for (const auto& [m, c] : actual.terms()) keys.push_back(m);
  std::sort(keys.begin(), keys.end(), std::greater<>());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto& [q, t] : keys) {
    const auto e = expected.coefficient(q, t);
    const auto a = actual.coefficient(q, t);
    if (e != a) {
      ++p.mismatches;
      if (!p.first) p.first = Counterexample{monomial_text(q, t), e.str(), a.str()};
    }
  }
}

QTPolynomial qt_for(int n, QTMode mode, const Execution& exec) {
  return exec.parallel ? qt_catalan(n, mode, exec.workers) : qt_catalan_serial(n, mode);
}

Partial run_qt_table(int n, const Execution& exec, nlohmann::json& detail) {
  const auto ab = qt_for(n, QTMode::area_bounce, exec);
  const auto da = qt_for(n, QTMode::dinv_area, exec);
  Partial p;
  p.words = catalan_u64(n);
  compare_polynomials(ab, da, p);
  if (n <= 3) {
    compare_polynomials(known_qt_catalan(n), ab, p);
    compare_polynomials(known_qt_catalan(n), da, p);
  }
  detail["area_bounce"] = ab.to_text();
  detail["dinv_area"] = da.to_text();
  detail["polynomial"] = ab.to_json();
  return p;
}

Partial run_qt_symmetry(int n, const Execution& exec, nlohmann::json& detail) {
  Partial p;
  p.words = catalan_u64(n);
  for (auto mode : {QTMode::area_bounce, QTMode::dinv_area}) {
    const auto poly = qt_for(n, mode, exec);
    compare_polynomials(poly, poly.swapped(), p);
    if (poly.total() != catalan(n)) {
      ++p.mismatches;
      if (!p.first) p.first = Counterexample{"q=t=1", catalan(n).str(), poly.total().str()};
    }
    detail[std::string(to_string(mode))] = {{"terms", poly.term_count()}, {"total", poly.total().str()}};
  }
  return p;
}

Partial run_enumeration_count(int n, const Execution& exec, nlohmann::json& detail) {
  struct ChunkScan {
    std::uint64_t count = 0;
    bool ordered = true;
    std::uint32_t first = 0, last = 0;
  };
  auto scan = [n](const Chunk& chunk) {
    ChunkScan s;
    std::optional<std::uint32_t> prev;
    for (const auto& w : DyckEnumeration(chunk)) {
      if (!DyckWord::is_dyck(w.bits(), n) || (prev && *prev >= w.bits())) s.ordered = false;
      if (!prev) s.first = w.bits();
      prev = w.bits();
      ++s.count;
    }
    s.last = prev.value_or(0);
    return s;
  };
  std::vector<Chunk> chunks = exec.parallel ? make_chunks(n, kChunkSize * 16) : make_chunks(n, catalan_u64(n));
  std::vector<ChunkScan> scans(chunks.size());
  const auto count = static_cast<std::ptrdiff_t>(chunks.size());
#pragma omp parallel for schedule(dynamic) num_threads(exec.workers) if (exec.parallel)
  for (std::ptrdiff_t c = 0; c < count; ++c) scans[static_cast<std::size_t>(c)] = scan(chunks[static_cast<std::size_t>(c)]);

  Partial p;
  bool ordered = true;
  for (std::size_t i = 0; i < scans.size(); ++i) {
    p.words += scans[i].count;
    ordered = ordered && scans[i].ordered && (i == 0 || scans[i - 1].last < scans[i].first);
  }
  const auto formula = catalan(n);
  if (BigInt(p.words) != formula) {
    ++p.mismatches;
    p.first = Counterexample{"n=" + std::to_string(n), formula.str(), std::to_string(p.words)};
  }
  if (!ordered) {
    ++p.mismatches;
    if (!p.first) p.first = Counterexample{"n=" + std::to_string(n), "strictly increasing Dyck words", "order violation"};
  }
  detail["catalan"] = formula.str();
  return p;
}

Partial run_variant_search(int n, nlohmann::json& detail) {
  const auto report = variant_search(n);
  Partial p;
  for (const auto& o : report.outcomes) p.words += o.words;
  const auto& def = report.outcomes.front();
  p.mismatches = def.conjugate_mismatches;
  p.first = def.first_conjugate_mismatch;
  detail = to_json(report);
  return p;
}

Partial run_one(const CheckSpec& spec, int n, const Execution& exec, nlohmann::json& detail) {
  switch (spec.kind) {
  case CheckKind::map_equivalence:
    return for_each_word(n, exec, [&](const DyckWord& w) { return check_equivalence(spec, w); });
  case CheckKind::statistic_exchange:
    return for_each_word(n, exec, [&](const DyckWord& w) { return check_exchange(spec, w); });
  case CheckKind::trace_levels:
    return for_each_word(n, exec, [&](const DyckWord& w) { return check_trace(w); });
  case CheckKind::bijection: return run_bijection(spec, n, exec, detail);
  case CheckKind::qt_table: return run_qt_table(n, exec, detail);
  case CheckKind::qt_symmetry: return run_qt_symmetry(n, exec, detail);
  case CheckKind::enumeration_count: return run_enumeration_count(n, exec, detail);
  case CheckKind::variant_search: return run_variant_search(n, detail);
  }
  throw Error("unknown check kind");
}

CheckReport execute(const CheckSpec& spec, const Execution& exec) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.spec = spec;
  report.worker_count = exec.workers;
  report.detail = nlohmann::json::object();
  Partial total;
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    nlohmann::json detail = nlohmann::json::object();
    total.merge(run_one(spec, n, exec, detail));
    if (!detail.empty()) report.detail[std::to_string(n)] = std::move(detail);
  }
  report.words_checked = total.words;
  report.mismatches = total.mismatches;
  report.first_counterexample = total.first;
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

struct NamedCheck {
  std::string name;
  CheckKind kind;
  MapId left;
  MapId right;
  ExchangeForm exchange;
  bool must_pass;
};

const std::vector<NamedCheck>& registry() {
  static const std::vector<NamedCheck> checks = {
      {"classical-equivalence", CheckKind::map_equivalence, MapId::area_vector, MapId::sweep, ExchangeForm::as_stated, true},
      {"sweep-forms", CheckKind::map_equivalence, MapId::sweep_forward, MapId::sweep, ExchangeForm::as_stated, true},
      {"bijection", CheckKind::bijection, MapId::sweep, MapId::sweep, ExchangeForm::as_stated, true},
      {"statistic-exchange", CheckKind::statistic_exchange, MapId::sweep, MapId::sweep, ExchangeForm::as_stated, true},
      {"statistic-exchange-rc", CheckKind::statistic_exchange, MapId::sweep, MapId::sweep, ExchangeForm::precomposed_rc, false},
      {"qt-table", CheckKind::qt_table, MapId::sweep, MapId::sweep, ExchangeForm::as_stated, true},
      {"qt-symmetry", CheckKind::qt_symmetry, MapId::sweep, MapId::sweep, ExchangeForm::as_stated, true},
      {"scaffolding-grouped", CheckKind::map_equivalence, MapId::scaffolding, MapId::scaffolding_grouped, ExchangeForm::as_stated, true},
      {"trace-levels", CheckKind::trace_levels, MapId::scaffolding, MapId::scaffolding, ExchangeForm::as_stated, true},
      {"scaffolding-conjugate", CheckKind::map_equivalence, MapId::scaffolding_conjugate, MapId::sweep, ExchangeForm::as_stated, true},
      {"scaffolding-direct", CheckKind::map_equivalence, MapId::scaffolding, MapId::sweep, ExchangeForm::as_stated, false},
      {"enumeration-count", CheckKind::enumeration_count, MapId::sweep, MapId::sweep, ExchangeForm::as_stated, true},
      {"variant-search", CheckKind::variant_search, MapId::scaffolding, MapId::sweep_conjugate, ExchangeForm::as_stated, false},
  };
  return checks;
}

std::string counterexample_text(const std::optional<Counterexample>& c) { return c ? c->input : std::string(); }

} // namespace

std::string_view to_string(CheckKind kind) {
  switch (kind) {
  case CheckKind::map_equivalence: return "map_equivalence";
  case CheckKind::bijection: return "bijection";
  case CheckKind::statistic_exchange: return "statistic_exchange";
  case CheckKind::qt_table: return "qt_table";
  case CheckKind::qt_symmetry: return "qt_symmetry";
  case CheckKind::trace_levels: return "trace_levels";
  case CheckKind::enumeration_count: return "enumeration_count";
  case CheckKind::variant_search: return "variant_search";
  }
  return "?";
}

std::string_view to_string(MapId map) {
  switch (map) {
  case MapId::area_vector: return "area-vector";
  case MapId::sweep: return "sweep";
  case MapId::sweep_forward: return "sweep-forward";
  case MapId::sweep_conjugate: return "sweep-conj";
  case MapId::scaffolding: return "scaffolding";
  case MapId::scaffolding_grouped: return "scaffolding-grouped";
  case MapId::scaffolding_conjugate: return "scaffolding-conj";
  }
  return "?";
}

std::string_view to_string(ExchangeForm form) {
  return form == ExchangeForm::as_stated ? "as_stated" : "precomposed_rc";
}

MapId parse_map_id(std::string_view text) {
  for (auto m : {MapId::area_vector, MapId::sweep, MapId::sweep_forward, MapId::sweep_conjugate, MapId::scaffolding,
                 MapId::scaffolding_grouped, MapId::scaffolding_conjugate})
    if (text == to_string(m)) return m;
  throw ParseError("unknown map: " + std::string(text));
}

DyckWord apply_map(MapId map, const DyckWord& w) {
  switch (map) {
  case MapId::area_vector: return zeta_area_vector(w);
  case MapId::sweep: return zeta_sweep(w);
  case MapId::sweep_forward: return zeta_sweep_forward(w);
  case MapId::sweep_conjugate: return zeta_sweep_conjugate(w);
  case MapId::scaffolding: return scaffolding(w);
  case MapId::scaffolding_grouped: return scaffolding_grouped(w);
  case MapId::scaffolding_conjugate: return scaffolding_conjugate(w);
  }
  throw Error("unknown map");
}

int max_semilength(CheckKind kind) {
  switch (kind) {
  case CheckKind::enumeration_count: return kMaxSemilength;
  case CheckKind::variant_search: return kMaxVariantSearch;
  default: return kMaxExhaustive;
  }
}

int min_semilength(CheckKind kind) { return kind == CheckKind::variant_search ? kMinVariantSearch : 1; }

void validate(const CheckSpec& spec) {
  const int lo = min_semilength(spec.kind), hi = max_semilength(spec.kind);
  if (spec.n_min < lo || spec.n_min > hi) throw SemilengthOutOfRange(spec.n_min, lo, hi);
  if (spec.n_max < spec.n_min || spec.n_max > hi) throw SemilengthOutOfRange(spec.n_max, spec.n_min, hi);
}

CheckReport run_check(const CheckSpec& spec, int workers) {
  return execute(spec, Execution{true, resolve_workers(workers)});
}

CheckReport run_check_serial(const CheckSpec& spec) { return execute(spec, Execution{false, 1}); }

bool same_result(const CheckReport& a, const CheckReport& b) {
  return a.spec.name == b.spec.name && a.spec.n_min == b.spec.n_min && a.spec.n_max == b.spec.n_max &&
         a.spec.kind == b.spec.kind && a.words_checked == b.words_checked && a.mismatches == b.mismatches &&
         a.first_counterexample == b.first_counterexample && a.detail == b.detail;
}

SuiteResult run_suite(const std::vector<CheckSpec>& specs, int workers) {
  if (specs.empty()) throw Error("empty check suite");
  for (const auto& s : specs) validate(s);
  SuiteResult result;
  for (const auto& s : specs) {
    result.reports.push_back(run_check(s, workers));
    if (s.must_pass && !result.reports.back().passed()) result.exit_status = 1;
  }
  return result;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : registry()) out.push_back(c.name);
    return out;
  }();
  return names;
}

std::vector<CheckSpec> make_checks(const std::vector<std::string>& names, int n_min, int n_max) {
  const bool all = std::find(names.begin(), names.end(), "all") != names.end();
  std::vector<const NamedCheck*> selected;
  for (const auto& c : registry())
    if (all || std::find(names.begin(), names.end(), c.name) != names.end()) selected.push_back(&c);
  for (const auto& name : names)
    if (name != "all" && std::none_of(registry().begin(), registry().end(), [&](const auto& c) { return c.name == name; }))
      throw ParseError("unknown check: " + name);
  if (n_min > n_max) throw SemilengthOutOfRange(n_min, 1, n_max);

  std::vector<CheckSpec> specs;
  for (int n = n_min; n <= n_max; ++n)
    for (const auto* c : selected) {
      CheckSpec s{c->name, n, n, c->kind, c->left, c->right, c->exchange, c->must_pass};
      const bool in_range = n >= min_semilength(c->kind) && n <= max_semilength(c->kind);
      if (!in_range && all && c->kind == CheckKind::variant_search) continue;
      validate(s);
      specs.push_back(std::move(s));
    }
  return specs;
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json ce = nullptr;
  if (r.first_counterexample)
    ce = {{"input", r.first_counterexample->input},
          {"expected", r.first_counterexample->expected},
          {"actual", r.first_counterexample->actual}};
  return {{"name", r.spec.name},
          {"kind", to_string(r.spec.kind)},
          {"n_min", r.spec.n_min},
          {"n_max", r.spec.n_max},
          {"left", to_string(r.spec.left)},
          {"right", to_string(r.spec.right)},
          {"exchange_form", to_string(r.spec.exchange)},
          {"must_pass", r.spec.must_pass},
          {"words_checked", r.words_checked},
          {"mismatches", r.mismatches},
          {"first_counterexample", ce},
          {"wall_seconds", r.wall_seconds},
          {"worker_count", r.worker_count},
          {"detail", r.detail}};
}

std::string csv_header() { return "name,n,words,mismatches,first_counterexample,seconds"; }

std::string csv_row(const CheckReport& r) {
  std::ostringstream os;
  os << r.spec.name << ',';
  if (r.spec.n_min == r.spec.n_max)
    os << r.spec.n_min;
  else
    os << r.spec.n_min << ".." << r.spec.n_max;
  os << ',' << r.words_checked << ',' << r.mismatches << ',' << counterexample_text(r.first_counterexample) << ','
     << r.wall_seconds;
  return os.str();
}

void write_reports(const std::vector<CheckReport>& reports, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream summary(dir / "summary.csv", std::ios::binary);
  if (!summary) throw Error("cannot write " + (dir / "summary.csv").string());
  summary << csv_header() << '\n';
  for (const auto& r : reports) {
    std::string file = r.spec.name + "_n" + std::to_string(r.spec.n_min);
    if (r.spec.n_max != r.spec.n_min) file += "-" + std::to_string(r.spec.n_max);
    std::ofstream out(dir / (file + ".json"), std::ios::binary);
    if (!out) throw Error("cannot write " + (dir / (file + ".json")).string());
    out << to_json(r).dump(2) << '\n';
    summary << csv_row(r) << '\n';
  }
}

} // namespace dyckzeta
