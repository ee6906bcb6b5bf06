#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace berge {

enum class ErrorCode {
  InvalidArgument,
  NonUniformEdge,
  VertexOutOfRange,
  ParseError,
  InvalidCycleLength,
  FormatError,
  IndexOutOfRange,
  EmptyHypergraph,
  TooFewEdges,
  VertexNotInHost,
  V0TooSmall,
  BadParameters,
  ParamsOutOfRange,
  DoesNotDivide,
  BlockTooSmall,
  OutsideTheoremRange,
  GridOutsideHypotheses,
  ScaleGuardExceeded,
  HostNotFree,
  Io,
};

const char* error_code_name(ErrorCode code) noexcept;

// Every failure in the library surfaces as this type. `position` carries the
// byte offset for ParseError and the 1-based line number for FormatError; it
// is -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::int64_t position = -1)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::int64_t position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::int64_t position_;
};

}  // namespace berge
