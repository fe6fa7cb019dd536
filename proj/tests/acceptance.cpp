// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance                      exit 1 if any criterion fails
//   acceptance --known-failures 6   exit 0 iff exactly the listed criteria fail

#include "oracles.hpp"

#include "dyckzeta/dataset.hpp"
#include "dyckzeta/enumerate.hpp"
#include "dyckzeta/harness.hpp"
#include "dyckzeta/scaffolding.hpp"
#include "dyckzeta/statistics.hpp"
#include "dyckzeta/zeta.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace dyckzeta;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string counterexample(const CheckReport& r) {
  if (!r.first_counterexample) return "-";
  const auto& c = *r.first_counterexample;
  return c.input + " (expected " + c.expected + ", got " + c.actual + ")";
}

CheckReport check(const std::string& name, int lo, int hi, int workers = 0) {
  auto spec = make_checks({name}, lo, lo).front();
  spec.n_max = hi;
  return run_check(spec, workers);
}

// Polynomial built from the geometric oracles, keyed by (q, t) exponent.
std::map<std::pair<int, int>, long> oracle_qt(int n, bool dinv_area) {
  std::map<std::pair<int, int>, long> out;
  for (const auto& w : oracle::dyck_words(n)) {
    if (dinv_area)
      ++out[{oracle::arm_leg_dinv(w), oracle::cell_area(w)}];
    else
      ++out[{oracle::cell_area(w), oracle::walk_bounce(w)}];
  }
  return out;
}

bool equals_oracle(const QTPolynomial& p, const std::map<std::pair<int, int>, long>& o) {
  if (p.term_count() != o.size()) return false;
  for (const auto& [m, c] : o)
    if (p.coefficient(m.first, m.second) != c) return false;
  return true;
}

std::uint64_t binomial_catalan(int n) {
  // binom(2n, n) / (n + 1); after step k the running value is binom(n + k, k)
  unsigned __int128 b = 1;
  for (int k = 1; k <= n; ++k) b = b * static_cast<unsigned>(n + k) / static_cast<unsigned>(k);
  return static_cast<std::uint64_t>(b / static_cast<unsigned>(n + 1));
}

// Hands each completed line to a callback; nothing is buffered beyond one line.
class LineSink : public std::streambuf {
public:
  explicit LineSink(std::function<void(const std::string&)> fn) : fn_(std::move(fn)) {}

protected:
  int_type overflow(int_type ch) override {
    if (ch == traits_type::eof()) return traits_type::not_eof(ch);
    put(static_cast<char>(ch));
    return ch;
  }
  std::streamsize xsputn(const char* s, std::streamsize n) override {
    for (std::streamsize i = 0; i < n; ++i) put(s[i]);
    return n;
  }

private:
  void put(char c) {
    if (c == '\n') {
      fn_(line_);
      line_.clear();
    } else {
      line_ += c;
    }
  }
  std::function<void(const std::string&)> fn_;
  std::string line_;
};

// -- criteria ---------------------------------------------------------------

Outcome qt_tables() {
  Outcome o;
  const auto start = Clock::now();
  const std::vector<std::string> table = {"1", "q + t", "q^3 + q^2*t + q*t^2 + q*t + t^3"};
  for (int n = 1; n <= 3; ++n)
    for (auto mode : {QTMode::area_bounce, QTMode::dinv_area}) {
      const auto text = qt_catalan(n, mode).to_text();
      o.require(text == table[static_cast<std::size_t>(n - 1)],
                "n=" + std::to_string(n) + " " + std::string(to_string(mode)) + " gave " + text);
    }
  const double s = seconds_since(start);
  o.require(s < 1.0, "time budget 1 s");
  return o;
}

Outcome qt_identity() {
  Outcome o;
  const auto start = Clock::now();
  for (int n = 1; n <= 8; ++n) {
    o.require(equals_oracle(qt_catalan(n, QTMode::area_bounce), oracle_qt(n, false)), "area/bounce oracle n=" + std::to_string(n));
    o.require(equals_oracle(qt_catalan(n, QTMode::dinv_area), oracle_qt(n, true)), "dinv/area oracle n=" + std::to_string(n));
  }
  for (int n = 1; n <= 12; ++n) {
    const auto ab = qt_catalan(n, QTMode::area_bounce);
    const auto da = qt_catalan(n, QTMode::dinv_area);
    o.require(ab == da, "double-sum equality n=" + std::to_string(n));
    o.require(ab == ab.swapped(), "q<->t symmetry n=" + std::to_string(n));
    o.require(ab.total() == binomial_catalan(n), "q=t=1 value n=" + std::to_string(n));
  }
  const double s = seconds_since(start);
  o.note("n<=12 in " + std::to_string(s) + " s");
  o.require(s < 60.0, "time budget 60 s");
  return o;
}

Outcome worked_example() {
  Outcome o;
  const auto start = Clock::now();
  const std::string in = "1110101100011000";
  const std::string expected = "1011010111001000";
  const auto w = parse_word(in);
  o.require(oracle::sweep(in) == expected, "oracle sweep reproduces the example");
  o.require(zeta_area_vector(w).str() == expected, "area-vector map gave " + zeta_area_vector(w).str());
  o.require(zeta_sweep(w).str() == expected, "sweep map gave " + zeta_sweep(w).str());
  const std::vector<int> row = {0, -1, -1, -1, -2, -2, -2, -2, -2, -2, -3, -3, -3, -3, -3, -4};
  o.require(sweep_output_levels(w) == row, "level row");
  o.require(seconds_since(start) < 1.0, "time budget 1 s");
  return o;
}

Outcome classical_equivalence() {
  Outcome o;
  const auto r = check("classical-equivalence", 1, 12);
  std::uint64_t expected_words = 0;
  for (int n = 1; n <= 12; ++n) expected_words += binomial_catalan(n);
  o.require(r.words_checked == expected_words, "words checked " + std::to_string(r.words_checked));
  o.require(r.passed(), "mismatches " + std::to_string(r.mismatches) + ", first " + counterexample(r));
  o.note(std::to_string(r.words_checked) + " words, " + std::to_string(r.mismatches) + " mismatches");
  return o;
}

Outcome bijectivity() {
  Outcome o;
  const auto r = check("bijection", 1, 12);
  o.require(r.passed(), "mismatches " + std::to_string(r.mismatches) + ", first " + counterexample(r));
  for (int n = 1; n <= 12; ++n) {
    const auto& d = r.detail.at(std::to_string(n));
    o.require(d.at("image_size").get<std::uint64_t>() == binomial_catalan(n), "image size n=" + std::to_string(n));
  }
  o.note(std::to_string(r.words_checked) + " words, image sizes = catalan(n)");
  return o;
}

Outcome statistic_exchange() {
  Outcome o;
  std::ostringstream counts;
  std::uint64_t total = 0;
  std::string first;
  for (int n = 1; n <= 12; ++n) {
    const auto r = check("statistic-exchange", n, n);
    total += r.mismatches;
    counts << (n > 1 ? " " : "") << r.mismatches;
    if (first.empty() && r.first_counterexample) first = counterexample(r);
  }
  // Independent confirmation of the smallest failure from the oracles.
  const std::string w = "110010";
  const std::string z = oracle::sweep(w);
  const bool oracle_fails = oracle::cell_area(w) != oracle::arm_leg_dinv(z) || oracle::walk_bounce(w) != oracle::cell_area(z);
  o.require(total == 0, "(area,bounce)(w) = (dinv,area)(zeta(w)): " + std::to_string(total) + " mismatches");
  o.note("mismatches per n=1..12: " + counts.str());
  o.note("first counterexample: " + first);
  o.note(std::string("oracle confirms failure at 110010: ") + (oracle_fails ? "yes" : "no"));
  const auto rc = check("statistic-exchange-rc", 1, 12);
  o.note("informational: (area,bounce)(zeta(rc w)) = (dinv,area)(w) over " + std::to_string(rc.words_checked) +
         " words, " + std::to_string(rc.mismatches) + " mismatches");
  return o;
}

Outcome scaffolding_consistency() {
  Outcome o;
  for (int n = 1; n <= 9; ++n)
    for (const auto& text : oracle::dyck_words(n))
      if (scaffolding(parse_word(text)).str() != oracle::scaffold(text)) {
        o.require(false, "oracle simulation disagrees at " + text);
        break;
      }
  const auto grouped = check("scaffolding-grouped", 1, 12);
  o.require(grouped.passed(), "agent vs grouped: " + std::to_string(grouped.mismatches) + ", first " + counterexample(grouped));
  const auto traces = check("trace-levels", 1, 12);
  o.require(traces.passed(), "trace levels: " + std::to_string(traces.mismatches) + ", first " + counterexample(traces));
  o.note(std::to_string(grouped.words_checked) + " words, traces checked on " + std::to_string(traces.words_checked));
  return o;
}

Outcome derived_equivalence() {
  Outcome o;
  for (int n = 1; n <= 9; ++n)
    for (const auto& text : oracle::dyck_words(n))
      if (oracle::rc(oracle::scaffold(oracle::rc(text))) != oracle::sweep(text)) {
        o.require(false, "oracles disagree at " + text);
        break;
      }
  const auto conj = check("scaffolding-conjugate", 1, 12);
  o.require(conj.passed(), "rc.scaffolding.rc vs sweep: " + std::to_string(conj.mismatches) + ", first " + counterexample(conj));
  o.note("rc.scaffolding.rc = sweep over " + std::to_string(conj.words_checked) + " words");
  std::ostringstream counts;
  for (int n = 1; n <= 12; ++n) {
    const auto direct = check("scaffolding-direct", n, n);
    counts << " n=" << n << ':' << direct.mismatches;
    if (direct.first_counterexample && (n == 3 || n == 8 || n == 12))
      o.note("informational: direct scaffolding vs sweep, n=" + std::to_string(n) + " first " + counterexample(direct));
  }
  o.note("informational: direct scaffolding vs sweep mismatches" + counts.str());
  return o;
}

Outcome counting() {
  Outcome o;
  const std::map<int, std::uint64_t> known_counts = {{11, 58786},   {12, 208012},  {13, 742900},
                                                 {14, 2674440}, {15, 9694845}, {16, 35357670}};
  for (int n = 11; n <= 13; ++n) {
    std::uint64_t count = 0;
    for (const auto& w : enumerate(n)) {
      (void)w;
      ++count;
    }
    o.require(count == known_counts.at(n), "enumerate(" + std::to_string(n) + ") gave " + std::to_string(count));
  }
  for (int n = 14; n <= 16; ++n) {
    o.require(catalan(n) == known_counts.at(n), "catalan(" + std::to_string(n) + ")");
    o.require(binomial_catalan(n) == known_counts.at(n), "binomial formula n=" + std::to_string(n));
  }
  return o;
}

Outcome determinism_and_performance() {
  Outcome o;
  for (const auto& name : {"classical-equivalence", "bijection", "statistic-exchange", "scaffolding-direct", "qt-table",
                           "trace-levels", "enumeration-count"}) {
    auto spec = make_checks({name}, 1, 1).front();
    spec.n_max = 10;
    const auto ref = run_check(spec, 1);
    for (int workers : {2, 8}) o.require(same_result(ref, run_check(spec, workers)), std::string(name) + " workers=" + std::to_string(workers));
    o.require(same_result(ref, run_check_serial(spec)), std::string(name) + " vs serial reference");
  }
  const auto r = check("classical-equivalence", 14, 14);
  o.require(r.passed() && r.words_checked == 2674440, "n=14 equivalence");
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << "n=14 classical-map equivalence: " << r.wall_seconds << " s on "
     << r.worker_count << " worker(s); soft target 60 s " << (r.wall_seconds < 60 ? "met" : "missed");
  o.note(os.str());
  o.require(r.wall_seconds < 300.0, "hard cap 300 s");
  return o;
}

Outcome dataset() {
  Outcome o;
  auto words = enumerate(13);
  auto it = words.begin();
  std::uint64_t parsed = 0;
  bool order_ok = true;
  LineSink sink([&](const std::string& line) {
    const auto [w, z] = parse_token_line(line);
    if (order_ok && (w != *it || z != zeta_sweep(w))) order_ok = false;
    ++it;
    ++parsed;
  });
  std::ostream out(&sink);
  const auto lines = write_dataset(13, DatasetMap::sweep, DatasetFormat::tokens, out);
  out.flush();
  o.require(lines == 742900, "pairs written " + std::to_string(lines));
  o.require(parsed == 742900, "lines parsed back " + std::to_string(parsed));
  o.require(order_ok, "token round trip and enumeration order");
  return o;
}

} // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--known-failures" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string item;
      while (std::getline(ss, item, ',')) known.insert(std::stoi(item));
    } else {
      std::cerr << "usage: acceptance [--known-failures 6[,..]]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"q,t-Catalan tables for n = 1..3, both modes", qt_tables},
      {"double-sum equality and q<->t symmetry, n <= 12", qt_identity},
      {"worked example under both classical maps", worked_example},
      {"area-vector map = sweep map, n <= 12", classical_equivalence},
      {"sweep map is a bijection, n <= 12", bijectivity},
      {"statistic exchange through zeta, n <= 12", statistic_exchange},
      {"agent simulation = grouped form; trace levels, n <= 12", scaffolding_consistency},
      {"rc.scaffolding.rc = sweep map, n <= 12", derived_equivalence},
      {"enumeration counts n = 11..16", counting},
      {"determinism over workers {1,2,8}; n = 14 timing", determinism_and_performance},
      {"dataset n = 13: 742900 pairs, tokens round-trip", dataset},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) failed.insert(id);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << id << "  " << criteria[i].first << "  ("
              << std::fixed << std::setprecision(2) << seconds_since(start) << " s)\n";
    for (const auto& n : o.notes) std::cout << "          " << n << '\n';
    std::cout.flush();
  }

  std::cout << failed.size() << " of " << criteria.size() << " criteria failed";
  if (!known.empty()) {
    std::cout << "; known failures:";
    for (int k : known) std::cout << ' ' << k;
  }
  std::cout << '\n';
  if (known.empty()) return failed.empty() ? 0 : 1;
  return failed == known ? 0 : 1;
}
