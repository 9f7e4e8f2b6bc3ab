#include "xscale/patch.hpp"

#include <string>

#include "xscale/error.hpp"

namespace xscale {

Patch extract_patch(const Image& img, PatchCoord coord, int side) {
  if (side <= 0 || coord.row < 0 || coord.col < 0 ||
      coord.row + side > img.height() || coord.col + side > img.width()) {
    throw Error(ErrorKind::kBounds,
                "patch of side " + std::to_string(side) + " at (" +
                    std::to_string(coord.row) + "," +
                    std::to_string(coord.col) + ") leaves " +
                    std::to_string(img.width()) + "x" +
                    std::to_string(img.height()) + " image");
  }
  const int c = img.channels();
  Patch p{coord, side, c, {}};
  p.values.reserve(static_cast<std::size_t>(side) * side * c);
  const auto px = img.pixels();
  for (int r = 0; r < side; ++r) {
    const std::size_t begin =
        (static_cast<std::size_t>(coord.row + r) * img.width() + coord.col) * c;
    p.values.insert(p.values.end(), px.begin() + begin,
                    px.begin() + begin + static_cast<std::size_t>(side) * c);
  }
  return p;
}

std::vector<int> patch_grid(int extent, int side, int stride) {
  std::vector<int> offsets;
  const int last = extent - side;
  if (last < 0 || stride <= 0) return offsets;
  for (int o = 0; o <= last; o += stride) offsets.push_back(o);
  if (offsets.back() != last) offsets.push_back(last);
  return offsets;
}

}  // namespace xscale
