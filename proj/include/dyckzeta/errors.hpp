#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dyckzeta {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input. The CLI maps these to exit status 2.
class ParseError : public Error {
public:
  using Error::Error;
};

class NonBinaryAlphabet : public ParseError {
public:
  NonBinaryAlphabet(std::size_t offset, char symbol)
      : ParseError("unknown step symbol '" + std::string(1, symbol) + "' at offset " +
                   std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

class NotBalanced : public ParseError {
public:
  NotBalanced(std::size_t ups, std::size_t downs)
      : ParseError("word is not balanced: " + std::to_string(ups) + " up-steps, " +
                   std::to_string(downs) + " down-steps") {}
};

class BelowDiagonal : public ParseError {
public:
  explicit BelowDiagonal(std::size_t offset)
      : ParseError("path goes below the diagonal at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

class SemilengthOutOfRange : public ParseError {
public:
  SemilengthOutOfRange(long long n, long long lo, long long hi)
      : ParseError("semilength " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                   std::to_string(hi) + "]") {}
};

/// A map produced something that violates an invariant it is supposed to
/// guarantee. Never expected; the CLI maps these to exit status 1.
class InternalInvariantViolation : public Error {
public:
  using Error::Error;
};

class DuplicateAgent : public InternalInvariantViolation {
public:
  DuplicateAgent(int position, int level)
      : InternalInvariantViolation("agent " + std::to_string(position) +
                                   " already present at level " + std::to_string(level)),
        position_(position) {}
  int position() const noexcept { return position_; }

private:
  int position_;
};

class NonTermination : public InternalInvariantViolation {
public:
  explicit NonTermination(int iterations)
      : InternalInvariantViolation("scaffolding did not terminate within " +
                                   std::to_string(iterations) + " iterations") {}
};

class NotInjective : public InternalInvariantViolation {
public:
  NotInjective(const std::string& first, const std::string& second, const std::string& image)
      : InternalInvariantViolation("words " + first + " and " + second + " share image " + image),
        first_(first), second_(second) {}
  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }

private:
  std::string first_;
  std::string second_;
};

} // namespace dyckzeta
