#pragma once

#include <stdexcept>
#include <string>

namespace xscale {

enum class ErrorKind {
  kInvalidDimension,
  kChannelMismatch,
  kScaleMismatch,
  kDimensionMismatch,
  kUnsupportedFormat,
  kCorruptFile,
  kIo,
  kBounds,
  kInsufficientCandidates,
  kInvalidInput,
  kCoverage,
  kImageTooSmall,
  kConfig,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace xscale
