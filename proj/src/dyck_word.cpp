#include "dyckzeta/dyck_word.hpp"

#include "dyckzeta/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace dyckzeta {

namespace {

int step_value(char c, std::size_t offset) {
  switch (c) {
  case '1': case 'N': case 'n': case 'U': case 'u': return 1;
  case '0': case 'E': case 'e': case 'D': case 'd': return 0;
  default: throw NonBinaryAlphabet(offset, c);
  }
}

// Checks balance and prefix nonnegativity, reporting the first violation.
void validate_steps(std::span<const std::uint8_t> steps) {
  if (steps.size() % 2 != 0) {
    auto ups = static_cast<std::size_t>(std::count(steps.begin(), steps.end(), 1));
    throw NotBalanced(ups, steps.size() - ups);
  }
  long height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height += steps[i] ? 1 : -1;
    if (height < 0) throw BelowDiagonal(i + 1);
  }
  if (height != 0) {
    auto ups = static_cast<std::size_t>(std::count(steps.begin(), steps.end(), 1));
    throw NotBalanced(ups, steps.size() - ups);
  }
  auto n = static_cast<long long>(steps.size() / 2);
  if (n < 1 || n > kMaxSemilength) throw SemilengthOutOfRange(n, 1, kMaxSemilength);
}

} // namespace

bool DyckWord::is_dyck(std::uint32_t bits, int n) noexcept {
  if (n < 1 || n > kMaxSemilength) return false;
  const int len = 2 * n;
  if (len < 32 && (bits >> len) != 0) return false;
  if (std::popcount(bits) != n) return false;
  int height = 0;
  for (int shift = len - 1; shift >= 0; --shift) {
    height += ((bits >> shift) & 1u) ? 1 : -1;
    if (height < 0) return false;
  }
  return true;
}

DyckWord DyckWord::from_bits(std::uint32_t bits, int n) {
  if (n < 1 || n > kMaxSemilength) throw SemilengthOutOfRange(n, 1, kMaxSemilength);
  BinarySequence s(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) s[static_cast<std::size_t>(i)] = (bits >> (2 * n - 1 - i)) & 1u;
  if (2 * n < 32 && (bits >> (2 * n)) != 0)
    throw InternalInvariantViolation("bit pattern wider than 2n");
  return from_steps(s);
}

DyckWord DyckWord::from_steps(std::span<const std::uint8_t> steps) {
  validate_steps(steps);
  std::uint32_t bits = 0;
  for (auto s : steps) bits = (bits << 1) | (s ? 1u : 0u);
  return DyckWord(bits, static_cast<int>(steps.size() / 2));
}

BinarySequence DyckWord::steps() const {
  BinarySequence s(static_cast<std::size_t>(length()));
  for (int i = 1; i <= length(); ++i) s[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(step(i));
  return s;
}

std::string DyckWord::str() const {
  std::string s(static_cast<std::size_t>(length()), '0');
  for (int i = 1; i <= length(); ++i)
    if (step(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  return s;
}

int LevelVector::max() const {
  return heights.empty() ? 0 : *std::max_element(heights.begin(), heights.end());
}

int AreaSequence::sum() const { return std::accumulate(rows.begin(), rows.end(), 0); }

const std::vector<int>& PeakSet::at_level(int level) const {
  static const std::vector<int> empty;
  auto it = by_level.find(level);
  return it == by_level.end() ? empty : it->second;
}

std::vector<int> RightStepSet::positions() const {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

BinarySequence parse_binary(std::string_view text) {
  BinarySequence bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i)
    bits.push_back(static_cast<std::uint8_t>(step_value(text[i], i + 1)));
  return bits;
}

DyckWord parse_word(std::string_view text) {
  auto bits = parse_binary(text);
  return DyckWord::from_steps(bits);
}

std::string to_string(const BinarySequence& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

LevelVector levels(const DyckWord& w) {
  LevelVector out;
  out.heights.reserve(static_cast<std::size_t>(w.length()));
  int h = 0;
  for (int i = 1; i <= w.length(); ++i) {
    h += w.step(i) ? 1 : -1;
    out.heights.push_back(h);
  }
  return out;
}

std::vector<int> levels_raw(std::span<const std::uint8_t> bits) {
  std::vector<int> out;
  out.reserve(bits.size());
  int h = 0;
  for (auto b : bits) {
    h += b ? 1 : -1;
    out.push_back(h);
  }
  return out;
}

AreaSequence area_sequence(const DyckWord& w) {
  AreaSequence a;
  a.rows.reserve(static_cast<std::size_t>(w.semilength()));
  int ups = 0, downs = 0;
  for (int i = 1; i <= w.length(); ++i) {
    if (w.step(i)) {
      a.rows.push_back(ups - downs);
      ++ups;
    } else {
      ++downs;
    }
  }
  return a;
}

PeakSet peaks(const DyckWord& w) {
  PeakSet p;
  int h = 0;
  for (int i = 1; i < w.length(); ++i) {
    h += w.step(i) ? 1 : -1;
    if (w.step(i) == 1 && w.step(i + 1) == 0) {
      p.by_level[h].push_back(i);
      p.max_level = std::max(p.max_level, h);
    }
  }
  return p;
}

RightStepSet right_steps(const DyckWord& w) {
  RightStepSet r;
  for (int i = 1; i <= w.length(); ++i)
    if (w.step(i) == 0) r.mask |= std::uint64_t{1} << i;
  return r;
}

BinarySequence reverse(const DyckWord& w) {
  auto s = w.steps();
  std::reverse(s.begin(), s.end());
  return s;
}

DyckWord rev_complement(const DyckWord& w) {
  const int len = w.length();
  std::uint32_t out = 0;
  for (int i = 1; i <= len; ++i) out = (out << 1) | static_cast<std::uint32_t>(1 - w.step(len + 1 - i));
  return unchecked_word(out, w.semilength());
}

} // namespace dyckzeta
