#pragma once

#include "dyckzeta/dyck_word.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace dyckzeta {

/// Zeta via level passes over an area sequence. For k = -1, 0, ..., max(a)
/// the rows are scanned bottom to top, writing 0 for a_i = k and 1 for
/// a_i = k + 1. The rows scanned are those of rc(w), which is the reading
/// that agrees with the sweep map.
DyckWord zeta_area_vector(const DyckWord& w);

/// Sweep zeta: reverse w, assign levels to the reversed word, then collect
/// its entries level by level for levels 0, -1, -2, ... (left to right
/// within a level).
DyckWord zeta_sweep(const DyckWord& w);

/// The same map computed on w itself: for k = 0, 1, 2, ..., emit the steps
/// whose pre-step height is k, right to left.
DyckWord zeta_sweep_forward(const DyckWord& w);

/// Sweep level of each output symbol, in output order (0, -1, -1, ...).
std::vector<int> sweep_output_levels(const DyckWord& w);

/// w -> rc(zeta_sweep(rc(w))).
DyckWord zeta_sweep_conjugate(const DyckWord& w);

/// Materialized inverse of zeta_sweep on Dyck(n).
class InverseZetaTable {
public:
  int semilength() const noexcept { return n_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Preimage of `image`; throws if `image` is not in the table.
  DyckWord operator()(const DyckWord& image) const;

private:
  friend InverseZetaTable inverse_zeta(int n);
  int n_ = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries_; // (image, preimage), sorted by image
};

inline constexpr int kMaxInverseTable = 14;

/// Builds { zeta_sweep(w) -> w } over Dyck(n), 1 <= n <= 14.
/// Throws NotInjective on a collision.
InverseZetaTable inverse_zeta(int n);

} // namespace dyckzeta
