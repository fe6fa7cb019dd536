#include "dyckzeta/dataset.hpp"

#include "dyckzeta/enumerate.hpp"
#include "dyckzeta/errors.hpp"
#include "dyckzeta/scaffolding.hpp"
#include "dyckzeta/zeta.hpp"

#include <algorithm>
#include <exception>
#include <ostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dyckzeta {

namespace {

constexpr int kParallelFrom = 12;
constexpr std::uint64_t kChunkSize = 1 << 14;
constexpr std::size_t kChunksPerBatch = 64;

void append_tokens(std::string& out, const DyckWord& w) {
  out += "bos";
  for (int i = 1; i <= w.length(); ++i) {
    out += ' ';
    out += w.step(i) ? '1' : '0';
  }
  out += " eos";
}

DyckWord apply(DatasetMap map, const DyckWord& w) {
  return map == DatasetMap::sweep ? zeta_sweep(w) : scaffolding(w);
}

void append_line(std::string& buffer, const DyckWord& w, DatasetMap map, DatasetFormat format) {
  buffer += format_pair(w, apply(map, w), format);
  buffer += '\n';
}

DyckWord parse_token_sequence(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(' ', pos);
    if (next == std::string_view::npos) next = text.size();
    tokens.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  if (tokens.size() < 2 || tokens.front() != "bos" || tokens.back() != "eos")
    throw ParseError("token sequence must be framed by bos/eos: " + std::string(text));
  BinarySequence steps;
  for (std::size_t i = 1; i + 1 < tokens.size(); ++i) {
    if (tokens[i] == "1")
      steps.push_back(1);
    else if (tokens[i] == "0")
      steps.push_back(0);
    else
      throw ParseError("unexpected token '" + std::string(tokens[i]) + "'");
  }
  return DyckWord::from_steps(steps);
}

} // namespace

DatasetMap parse_dataset_map(std::string_view text) {
  if (text == "sweep") return DatasetMap::sweep;
  if (text == "scaffolding") return DatasetMap::scaffolding;
  throw ParseError("unknown dataset map: " + std::string(text));
}

DatasetFormat parse_dataset_format(std::string_view text) {
  if (text == "csv") return DatasetFormat::csv;
  if (text == "tokens") return DatasetFormat::tokens;
  throw ParseError("unknown dataset format: " + std::string(text));
}

std::string format_pair(const DyckWord& input, const DyckWord& output, DatasetFormat format) {
  if (format == DatasetFormat::csv) return input.str() + "," + output.str();
  std::string line;
  append_tokens(line, input);
  line += '\t';
  append_tokens(line, output);
  return line;
}

std::pair<DyckWord, DyckWord> parse_token_line(std::string_view line) {
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  const auto tab = line.find('\t');
  if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos)
    throw ParseError("token line must hold exactly two tab-separated sequences");
  return {parse_token_sequence(line.substr(0, tab)), parse_token_sequence(line.substr(tab + 1))};
}

std::uint64_t write_dataset(int n, DatasetMap map, DatasetFormat format, std::ostream& out, int workers) {
  if (n < 1 || n > kMaxDataset) throw SemilengthOutOfRange(n, 1, kMaxDataset);
  std::uint64_t lines = 0;
  if (n < kParallelFrom) {
    std::string buffer;
    for (const auto& w : enumerate(n)) {
      append_line(buffer, w, map, format);
      ++lines;
    }
    out << buffer;
    return lines;
  }

#ifdef _OPENMP
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#else
  (void)workers;
#endif
  const auto chunks = make_chunks(n, kChunkSize);
  // Bounded memory: render a batch of chunks in parallel, then write it in order.
  for (std::size_t batch = 0; batch < chunks.size(); batch += kChunksPerBatch) {
    const std::size_t end = std::min(chunks.size(), batch + kChunksPerBatch);
    std::vector<std::string> buffers(end - batch);
    std::vector<std::exception_ptr> errors(end - batch);
    const auto count = static_cast<std::ptrdiff_t>(end - batch);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::ptrdiff_t c = 0; c < count; ++c) {
      auto& buffer = buffers[static_cast<std::size_t>(c)];
      try {
        for (const auto& w : DyckEnumeration(chunks[batch + static_cast<std::size_t>(c)]))
          append_line(buffer, w, map, format);
      } catch (...) {
        errors[static_cast<std::size_t>(c)] = std::current_exception();
      }
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (std::size_t c = batch; c < end; ++c) lines += chunks[c].size();
    for (const auto& b : buffers) out << b;
  }
  return lines;
}

} // namespace dyckzeta
