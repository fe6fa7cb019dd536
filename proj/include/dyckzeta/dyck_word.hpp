#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyckzeta {

inline constexpr int kMaxSemilength = 16;

/// Raw step sequence with no balance requirement (e.g. a reversed Dyck word).
/// Entries are 0 or 1; index 0 holds position 1.
using BinarySequence = std::vector<std::uint8_t>;

/// Validated Dyck word of semilength 1..16, packed into 32 bits.
///
/// Position i (1-based, leftmost = 1) lives at bit (2n - i), so for words of
/// equal semilength the integer order of `bits()` is the lexicographic order
/// of the text form ('0' < '1').
class DyckWord {
public:
  /// "10", the only word of semilength 1.
  DyckWord() = default;

  /// Validates and wraps a packed pattern; throws the same errors as parse_word.
  static DyckWord from_bits(std::uint32_t bits, int semilength);
  static DyckWord from_steps(std::span<const std::uint8_t> steps);

  /// Returns true iff `bits` is a Dyck word of the given semilength.
  static bool is_dyck(std::uint32_t bits, int semilength) noexcept;

  int semilength() const noexcept { return n_; }
  int length() const noexcept { return 2 * n_; }
  std::uint32_t bits() const noexcept { return bits_; }

  /// Step at 1-based position i: 1 = up/north, 0 = down/east.
  int step(int i) const noexcept { return static_cast<int>((bits_ >> (2 * n_ - i)) & 1u); }

  BinarySequence steps() const;
  std::string str() const;

  friend bool operator==(const DyckWord&, const DyckWord&) = default;
  friend auto operator<=>(const DyckWord& a, const DyckWord& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.bits_ <=> b.bits_;
  }

private:
  DyckWord(std::uint32_t bits, int n) : bits_(bits), n_(n) {}
  friend DyckWord unchecked_word(std::uint32_t, int) noexcept;

  std::uint32_t bits_ = 0b10;
  int n_ = 1;
};

/// Wraps bits already known to be a Dyck word. Hot loops only.
inline DyckWord unchecked_word(std::uint32_t bits, int n) noexcept { return DyckWord(bits, n); }

/// Heights after each step: heights[i-1] = ℓ_i, with ℓ_0 = 0 implicit.
struct LevelVector {
  std::vector<int> heights;

  /// ℓ_i for 0 <= i <= 2n.
  int at(int i) const { return i == 0 ? 0 : heights.at(static_cast<std::size_t>(i - 1)); }
  int max() const;
  friend bool operator==(const LevelVector&, const LevelVector&) = default;
};

/// Row cell counts a_1..a_n, rows numbered from the bottom.
struct AreaSequence {
  std::vector<int> rows;

  int sum() const;
  friend bool operator==(const AreaSequence&, const AreaSequence&) = default;
};

/// Peak positions (w_i, w_{i+1}) = (1, 0) grouped by peak height ℓ_i.
struct PeakSet {
  std::map<int, std::vector<int>> by_level;
  int max_level = 0;

  const std::vector<int>& at_level(int level) const;
};

/// Positions of the down-steps.
struct RightStepSet {
  std::uint64_t mask = 0; // bit i set iff position i is a down-step

  bool contains(int position) const noexcept {
    return position >= 0 && position < 64 && ((mask >> position) & 1u) != 0;
  }
  std::vector<int> positions() const;
};

/// Accepts '1'/'0', 'N'/'E' and 'U'/'D' (case-insensitive).
DyckWord parse_word(std::string_view text);

/// Parses a raw 0/1 sequence (aliases accepted) without Dyck validation.
BinarySequence parse_binary(std::string_view text);
std::string to_string(const BinarySequence& bits);

LevelVector levels(const DyckWord& w);
std::vector<int> levels_raw(std::span<const std::uint8_t> bits);

AreaSequence area_sequence(const DyckWord& w);
PeakSet peaks(const DyckWord& w);
RightStepSet right_steps(const DyckWord& w);

BinarySequence reverse(const DyckWord& w);
DyckWord rev_complement(const DyckWord& w);

} // namespace dyckzeta
