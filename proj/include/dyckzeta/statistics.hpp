#pragma once

#include "dyckzeta/dyck_word.hpp"
#include "dyckzeta/polynomial.hpp"

#include <string_view>

namespace dyckzeta {

/// Sum of the area sequence.
int area(const DyckWord& w);

/// Bounce statistic: follow the bounce path from (0,0), going north until the
/// path has an east step starting there, then east back to the diagonal.
/// Each intermediate diagonal touch (j, j) contributes n - j.
int bounce(const DyckWord& w);

/// #{i < j : a_i = a_j} + #{i < j : a_i = a_j + 1} over the area sequence.
int dinv(const DyckWord& w);

enum class QTMode { area_bounce, dinv_area };

std::string_view to_string(QTMode mode);
QTMode parse_qt_mode(std::string_view text);

inline constexpr int kMaxQTCatalan = 14;

/// Exhaustive generating function over Dyck(n), 1 <= n <= 14.
/// Parallel over enumeration chunks; `workers` <= 0 uses the OpenMP default.
QTPolynomial qt_catalan(int n, QTMode mode, int workers = 0);

/// Single-threaded reference for qt_catalan.
QTPolynomial qt_catalan_serial(int n, QTMode mode);

} // namespace dyckzeta
