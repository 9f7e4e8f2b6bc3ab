#include "xscale/error.hpp"

namespace xscale {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidDimension: return "invalid dimension";
    case ErrorKind::kChannelMismatch: return "channel mismatch";
    case ErrorKind::kScaleMismatch: return "scale mismatch";
    case ErrorKind::kDimensionMismatch: return "dimension mismatch";
    case ErrorKind::kUnsupportedFormat: return "unsupported format";
    case ErrorKind::kCorruptFile: return "corrupt file";
    case ErrorKind::kIo: return "i/o error";
    case ErrorKind::kBounds: return "out of bounds";
    case ErrorKind::kInsufficientCandidates: return "insufficient candidates";
    case ErrorKind::kInvalidInput: return "invalid input";
    case ErrorKind::kCoverage: return "coverage";
    case ErrorKind::kImageTooSmall: return "image too small";
    case ErrorKind::kConfig: return "config";
  }
  return "unknown";
}

}  // namespace xscale
