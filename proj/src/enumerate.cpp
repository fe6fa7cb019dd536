#include "dyckzeta/enumerate.hpp"

#include "dyckzeta/errors.hpp"

#include <algorithm>
#include <array>

namespace dyckzeta {

namespace {

constexpr int kMaxLen = 2 * kMaxSemilength;

// completions[r][h]: ways to finish with r steps from height h, staying >= 0 and ending at 0.
struct CompletionTable {
  std::array<std::array<std::uint64_t, kMaxLen + 2>, kMaxLen + 1> count{};

  constexpr CompletionTable() {
    count[0][0] = 1;
    for (int r = 1; r <= kMaxLen; ++r)
      for (int h = 0; h <= kMaxLen; ++h) {
        std::uint64_t c = count[r - 1][h + 1];
        if (h > 0) c += count[r - 1][h - 1];
        count[r][h] = c;
      }
  }
};

constexpr CompletionTable kCompletions{};

std::uint64_t completions(int remaining, int height) {
  if (height < 0 || height > kMaxLen) return 0;
  return kCompletions.count[static_cast<std::size_t>(remaining)][static_cast<std::size_t>(height)];
}

void check_n(int n, int lo, int hi) {
  if (n < lo || n > hi) throw SemilengthOutOfRange(n, lo, hi);
}

} // namespace

BigInt catalan(int n) {
  if (n < 0) throw SemilengthOutOfRange(n, 0, 1 << 20);
  BigInt c = 1;
  // C(k+1) = C(k) * 2(2k+1) / (k+2)
  for (int k = 0; k < n; ++k) c = c * (2 * (2 * k + 1)) / (k + 2);
  return c;
}

std::uint64_t catalan_u64(int n) {
  check_n(n, 0, kMaxSemilength);
  return completions(2 * n, 0);
}

std::uint64_t rank(const DyckWord& w) {
  const int len = w.length();
  std::uint64_t r = 0;
  int h = 0;
  for (int i = 1; i <= len; ++i) {
    if (w.step(i)) {
      r += completions(len - i, h - 1); // words with a 0 here come first
      ++h;
    } else {
      --h;
    }
  }
  return r;
}

DyckWord unrank(int n, std::uint64_t r) {
  check_n(n, 1, kMaxSemilength);
  if (r >= catalan_u64(n)) throw Error("rank " + std::to_string(r) + " out of range for n=" + std::to_string(n));
  const int len = 2 * n;
  std::uint32_t bits = 0;
  int h = 0;
  for (int i = 1; i <= len; ++i) {
    const std::uint64_t with_down = completions(len - i, h - 1);
    if (r < with_down) {
      bits <<= 1;
      --h;
    } else {
      r -= with_down;
      bits = (bits << 1) | 1u;
      ++h;
    }
  }
  return unchecked_word(bits, n);
}

DyckWord first_word(int n) {
  check_n(n, 1, kMaxSemilength);
  std::uint32_t bits = 0;
  for (int k = 0; k < n; ++k) bits = (bits << 2) | 0b10u;
  return unchecked_word(bits, n);
}

std::optional<DyckWord> next_word(const DyckWord& w) {
  const int n = w.semilength();
  const int len = 2 * n;
  std::array<int, kMaxLen + 1> ups_before{};
  std::array<int, kMaxLen + 1> height_before{};
  int ups = 0, h = 0;
  for (int i = 1; i <= len; ++i) {
    ups_before[static_cast<std::size_t>(i)] = ups;
    height_before[static_cast<std::size_t>(i)] = h;
    if (w.step(i)) {
      ++ups;
      ++h;
    } else {
      --h;
    }
  }
  for (int i = len; i >= 1; --i) {
    if (w.step(i) != 0 || ups_before[static_cast<std::size_t>(i)] >= n) continue;
    // Flip position i to an up-step, then append the smallest completion 0^h (10)^k.
    const int height = height_before[static_cast<std::size_t>(i)] + 1;
    const int remaining_ups = n - ups_before[static_cast<std::size_t>(i)] - 1;
    std::uint32_t bits = (w.bits() >> (len - i)) | 1u;
    bits <<= height;
    for (int k = 0; k < remaining_ups; ++k) bits = (bits << 2) | 0b10u;
    return unchecked_word(bits, n);
  }
  return std::nullopt;
}

std::vector<Chunk> make_chunks(int n, std::uint64_t chunk_size) {
  check_n(n, 1, kMaxSemilength);
  if (chunk_size == 0) chunk_size = 1;
  const std::uint64_t total = catalan_u64(n);
  std::vector<Chunk> chunks;
  chunks.reserve(static_cast<std::size_t>((total + chunk_size - 1) / chunk_size));
  for (std::uint64_t b = 0; b < total; b += chunk_size)
    chunks.push_back(Chunk{n, b, std::min(total, b + chunk_size)});
  return chunks;
}

DyckEnumeration::iterator& DyckEnumeration::iterator::operator++() {
  if (--remaining_ > 0) current_ = *next_word(current_);
  return *this;
}

DyckEnumeration::DyckEnumeration(int n, int max_n) {
  check_n(n, 1, max_n < kMaxSemilength ? max_n : kMaxSemilength);
  chunk_ = Chunk{n, 0, catalan_u64(n)};
}

DyckEnumeration::DyckEnumeration(const Chunk& chunk) : chunk_(chunk) {
  check_n(chunk.n, 1, kMaxSemilength);
  if (chunk.begin > chunk.end || chunk.end > catalan_u64(chunk.n)) throw Error("chunk outside Dyck(n)");
}

DyckEnumeration::iterator DyckEnumeration::begin() const {
  if (chunk_.size() == 0) return end();
  return iterator(unrank(chunk_.n, chunk_.begin), chunk_.size());
}

} // namespace dyckzeta
