#include "dyckzeta/statistics.hpp"

#include "dyckzeta/enumerate.hpp"
#include "dyckzeta/errors.hpp"

#include <array>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dyckzeta {

namespace {

constexpr std::uint64_t kChunkSize = 1 << 14;

// Area-sequence rows of w, bottom row first; returns n.
int fill_area_rows(const DyckWord& w, std::array<int, kMaxSemilength>& rows) {
  int ups = 0, downs = 0;
  for (int i = 1; i <= w.length(); ++i) {
    if (w.step(i)) {
      rows[static_cast<std::size_t>(ups)] = ups - downs;
      ++ups;
    } else
      ++downs;
  }
  return ups;
}

std::pair<int, int> exponents(const DyckWord& w, QTMode mode) {
  if (mode == QTMode::area_bounce) return {area(w), bounce(w)};
  return {dinv(w), area(w)};
}

// Max exponent of either variable over Dyck(n) is n(n-1)/2.
struct DenseCounts {
  int side;
  std::vector<std::uint64_t> cells;

  explicit DenseCounts(int n) : side(n * (n - 1) / 2 + 1), cells(static_cast<std::size_t>(side * side), 0) {}
  std::uint64_t& at(int q, int t) { return cells[static_cast<std::size_t>(q * side + t)]; }

  DenseCounts& operator+=(const DenseCounts& o) {
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] += o.cells[i];
    return *this;
  }

  QTPolynomial to_polynomial() const {
    QTPolynomial p;
    for (int q = 0; q < side; ++q)
      for (int t = 0; t < side; ++t) {
        auto c = cells[static_cast<std::size_t>(q * side + t)];
        if (c) p.add(q, t, BigInt(c));
      }
    return p;
  }
};

void check_qt_n(int n) {
  if (n < 1 || n > kMaxQTCatalan) throw SemilengthOutOfRange(n, 1, kMaxQTCatalan);
}

} // namespace

int area(const DyckWord& w) {
  std::array<int, kMaxSemilength> rows{};
  const int n = fill_area_rows(w, rows);
  int s = 0;
  for (int i = 0; i < n; ++i) s += rows[static_cast<std::size_t>(i)];
  return s;
}

int bounce(const DyckWord& w) {
  const int n = w.semilength();
  // east_height[j]: number of up-steps before the (j+1)-th down-step
  std::array<int, kMaxSemilength> east_height{};
  int ups = 0, downs = 0;
  for (int i = 1; i <= w.length(); ++i) {
    if (w.step(i))
      ++ups;
    else
      east_height[static_cast<std::size_t>(downs++)] = ups;
  }
  int total = 0;
  int j = 0;
  while (true) {
    const int h = east_height[static_cast<std::size_t>(j)];
    if (h == n) return total;
    j = h;
    total += n - j;
  }
}

int dinv(const DyckWord& w) {
  std::array<int, kMaxSemilength> rows{};
  const int n = fill_area_rows(w, rows);
  int d = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int ai = rows[static_cast<std::size_t>(i)];
      const int aj = rows[static_cast<std::size_t>(j)];
      if (ai == aj || ai == aj + 1) ++d;
    }
  return d;
}

std::string_view to_string(QTMode mode) {
  return mode == QTMode::area_bounce ? "area_bounce" : "dinv_area";
}

QTMode parse_qt_mode(std::string_view text) {
  if (text == "area_bounce" || text == "area-bounce") return QTMode::area_bounce;
  if (text == "dinv_area" || text == "dinv-area") return QTMode::dinv_area;
  throw ParseError("unknown q,t mode: " + std::string(text));
}

QTPolynomial qt_catalan_serial(int n, QTMode mode) {
  check_qt_n(n);
  DenseCounts counts(n);
  for (const auto& w : enumerate(n)) {
    auto [q, t] = exponents(w, mode);
    ++counts.at(q, t);
  }
  return counts.to_polynomial();
}

QTPolynomial qt_catalan(int n, QTMode mode, int workers) {
  check_qt_n(n);
  const auto chunks = make_chunks(n, kChunkSize);
  const auto chunk_count = static_cast<std::ptrdiff_t>(chunks.size());
  std::vector<DenseCounts> partial(chunks.size(), DenseCounts(n));
#ifdef _OPENMP
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#else
  (void)workers;
#endif
  for (std::ptrdiff_t c = 0; c < chunk_count; ++c) {
    auto& acc = partial[static_cast<std::size_t>(c)];
    for (const auto& w : DyckEnumeration(chunks[static_cast<std::size_t>(c)])) {
      auto [q, t] = exponents(w, mode);
      ++acc.at(q, t);
    }
  }
  DenseCounts total(n);
  for (const auto& p : partial) total += p;
  return total.to_polynomial();
}

} // namespace dyckzeta
