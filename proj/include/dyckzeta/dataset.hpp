#pragma once

#include "dyckzeta/dyck_word.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace dyckzeta {

enum class DatasetMap { sweep, scaffolding };
enum class DatasetFormat { csv, tokens };

DatasetMap parse_dataset_map(std::string_view text);
DatasetFormat parse_dataset_format(std::string_view text);

inline constexpr int kMaxDataset = 14;

/// csv:    "1010,1100"
/// tokens: "bos 1 0 1 0 eos\tbos 1 1 0 0 eos"
std::string format_pair(const DyckWord& input, const DyckWord& output, DatasetFormat format);

/// Inverse of the tokens format; throws ParseError on malformed lines.
std::pair<DyckWord, DyckWord> parse_token_line(std::string_view line);

/// Emits one line per word of Dyck(n) in enumeration order and returns the
/// number of lines. Work is split over chunks for n >= 12; output order does
/// not depend on `workers`.
std::uint64_t write_dataset(int n, DatasetMap map, DatasetFormat format, std::ostream& out, int workers = 0);

} // namespace dyckzeta
