#pragma once

#include <vector>

#include "xscale/image.hpp"

namespace xscale {

enum class ScaleTag { kLr, kLrDown };

struct PatchCoord {
  int row = 0;
  int col = 0;
  ScaleTag tag = ScaleTag::kLr;

  friend bool operator==(const PatchCoord&, const PatchCoord&) = default;
};

// Square side x side x channels block of samples, row-major and
// channel-interleaved like Image, remembering where it came from (or where
// it is to be placed).
struct Patch {
  PatchCoord origin;
  int side = 0;
  int channels = 0;
  std::vector<double> values;

  double at(int row, int col, int ch) const {
    return values[(static_cast<std::size_t>(row) * side + col) * channels + ch];
  }
};

// Copies the side x side block whose top-left is coord. Throws kBounds if
// the block leaves the image.
Patch extract_patch(const Image& img, PatchCoord coord, int side);

// Top-left offsets 0, stride, 2*stride, ... along one axis, with the last
// valid offset (extent - side) appended when the stride skips it, so the
// patches always reach the far border.
std::vector<int> patch_grid(int extent, int side, int stride);

}  // namespace xscale
