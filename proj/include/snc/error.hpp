#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace snc {

enum class ErrorCode {
  LoopRejected,
  DigonRejected,
  DuplicateArc,
  DuplicateEdge,
  VertexOutOfRange,
  NegativeWeight,
  NotATournament,
  MoveLimitExceeded,
  TooLarge,
  InternalTheoremViolation,
  NotMissing,
  NotAllGood,
  NotAViolation,
  BadProfile,
  NoWitnessFound,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Base class of every error raised by the library. `line` is set when the
/// error was raised while parsing a text document.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(message), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  const std::optional<std::size_t>& line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace snc
