#include "dyckzeta/zeta.hpp"

#include "dyckzeta/enumerate.hpp"
#include "dyckzeta/errors.hpp"

#include <algorithm>
#include <array>

namespace dyckzeta {

namespace {

constexpr int kMaxLen = 2 * kMaxSemilength;

DyckWord checked_output(std::uint32_t bits, int n, const char* map_name, const DyckWord& input) {
  if (!DyckWord::is_dyck(bits, n))
    throw InternalInvariantViolation(std::string(map_name) + " produced a non-Dyck word from " + input.str());
  return unchecked_word(bits, n);
}

} // namespace

DyckWord zeta_area_vector(const DyckWord& w) {
  const DyckWord source = rev_complement(w);
  std::array<int, kMaxSemilength> rows{};
  const int n = source.semilength();
  int ups = 0, downs = 0, top = 0;
  for (int i = 1; i <= source.length(); ++i) {
    if (source.step(i)) {
      rows[static_cast<std::size_t>(ups)] = ups - downs;
      top = std::max(top, ups - downs);
      ++ups;
    } else {
      ++downs;
    }
  }
  std::uint32_t out = 0;
  int written = 0;
  for (int k = -1; k <= top; ++k)
    for (int i = 0; i < n; ++i) {
      const int a = rows[static_cast<std::size_t>(i)];
      if (a == k) {
        out <<= 1;
        ++written;
      } else if (a == k + 1) {
        out = (out << 1) | 1u;
        ++written;
      }
    }
  if (written != 2 * n) throw InternalInvariantViolation("area-vector zeta wrote " + std::to_string(written) + " steps");
  return checked_output(out, n, "zeta_area_vector", w);
}

DyckWord zeta_sweep(const DyckWord& w) {
  const int len = w.length();
  std::array<std::uint8_t, kMaxLen> rev{};
  std::array<int, kMaxLen> level{};
  int h = 0, lowest = 0;
  for (int i = 0; i < len; ++i) {
    rev[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(w.step(len - i));
    h += rev[static_cast<std::size_t>(i)] ? 1 : -1;
    level[static_cast<std::size_t>(i)] = h;
    lowest = std::min(lowest, h);
  }
  std::uint32_t out = 0;
  for (int c = 0; c >= lowest; --c)
    for (int i = 0; i < len; ++i)
      if (level[static_cast<std::size_t>(i)] == c) out = (out << 1) | rev[static_cast<std::size_t>(i)];
  return checked_output(out, w.semilength(), "zeta_sweep", w);
}

DyckWord zeta_sweep_forward(const DyckWord& w) {
  const int len = w.length();
  std::array<int, kMaxLen + 1> pre{}; // pre[j] = ℓ_{j-1}
  int h = 0, top = 0;
  for (int j = 1; j <= len; ++j) {
    pre[static_cast<std::size_t>(j)] = h;
    top = std::max(top, h);
    h += w.step(j) ? 1 : -1;
  }
  std::uint32_t out = 0;
  for (int k = 0; k <= top; ++k)
    for (int j = len; j >= 1; --j)
      if (pre[static_cast<std::size_t>(j)] == k) out = (out << 1) | static_cast<std::uint32_t>(w.step(j));
  return checked_output(out, w.semilength(), "zeta_sweep_forward", w);
}

std::vector<int> sweep_output_levels(const DyckWord& w) {
  const auto m = levels_raw(reverse(w));
  std::vector<int> out;
  out.reserve(m.size());
  const int lowest = m.empty() ? 0 : *std::min_element(m.begin(), m.end());
  for (int c = 0; c >= lowest; --c)
    for (int x : m)
      if (x == c) out.push_back(c);
  return out;
}

DyckWord zeta_sweep_conjugate(const DyckWord& w) { return rev_complement(zeta_sweep(rev_complement(w))); }

DyckWord InverseZetaTable::operator()(const DyckWord& image) const {
  if (image.semilength() != n_) throw Error("word " + image.str() + " has the wrong semilength for this table");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), image.bits(),
                             [](const auto& e, std::uint32_t key) { return e.first < key; });
  if (it == entries_.end() || it->first != image.bits()) throw Error("word " + image.str() + " not in table");
  return unchecked_word(it->second, n_);
}

InverseZetaTable inverse_zeta(int n) {
  if (n < 1 || n > kMaxInverseTable) throw SemilengthOutOfRange(n, 1, kMaxInverseTable);
  InverseZetaTable table;
  table.n_ = n;
  table.entries_.reserve(static_cast<std::size_t>(catalan_u64(n)));
  for (const auto& w : enumerate(n)) table.entries_.emplace_back(zeta_sweep(w).bits(), w.bits());
  std::sort(table.entries_.begin(), table.entries_.end());
  for (std::size_t i = 1; i < table.entries_.size(); ++i)
    if (table.entries_[i].first == table.entries_[i - 1].first)
      throw NotInjective(unchecked_word(table.entries_[i - 1].second, n).str(),
                         unchecked_word(table.entries_[i].second, n).str(),
                         unchecked_word(table.entries_[i].first, n).str());
  return table;
}

} // namespace dyckzeta
