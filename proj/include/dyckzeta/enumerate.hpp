#pragma once

#include "dyckzeta/dyck_word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

namespace dyckzeta {

using BigInt = boost::multiprecision::cpp_int;

/// C(n) = binomial(2n, n) / (n + 1), exact for any n >= 0.
BigInt catalan(int n);

/// Catalan(n) as a 64-bit count; n must be within 0..kMaxSemilength.
std::uint64_t catalan_u64(int n);

/// Lexicographic rank of w among Dyck(n), 0-based.
std::uint64_t rank(const DyckWord& w);
DyckWord unrank(int n, std::uint64_t rank);

DyckWord first_word(int n);
/// Lexicographic successor within Dyck(n); nullopt after the last word.
std::optional<DyckWord> next_word(const DyckWord& w);

/// Contiguous rank interval [begin, end) of Dyck(n).
struct Chunk {
  int n = 1;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;

  std::uint64_t size() const noexcept { return end - begin; }
};

/// Splits Dyck(n) into consecutive chunks of at most `chunk_size` words.
std::vector<Chunk> make_chunks(int n, std::uint64_t chunk_size);

/// Single-pass stream over a rank range of Dyck(n), in lexicographic order.
class DyckEnumeration {
public:
  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = DyckWord;
    using difference_type = std::ptrdiff_t;
    using pointer = const DyckWord*;
    using reference = const DyckWord&;

    iterator() = default;
    const DyckWord& operator*() const { return current_; }
    const DyckWord* operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.remaining_ == b.remaining_; }

  private:
    friend class DyckEnumeration;
    iterator(DyckWord first, std::uint64_t remaining) : current_(first), remaining_(remaining) {}
    DyckWord current_;
    std::uint64_t remaining_ = 0;
  };

  /// All of Dyck(n); throws SemilengthOutOfRange unless 1 <= n <= max_n.
  explicit DyckEnumeration(int n, int max_n = kMaxSemilength);
  explicit DyckEnumeration(const Chunk& chunk);

  iterator begin() const;
  iterator end() const { return iterator(); }
  std::uint64_t size() const noexcept { return chunk_.size(); }

private:
  Chunk chunk_;
};

inline DyckEnumeration enumerate(int n, int max_n = kMaxSemilength) { return DyckEnumeration(n, max_n); }

} // namespace dyckzeta
