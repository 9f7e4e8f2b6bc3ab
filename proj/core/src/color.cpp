#include "xscale/color.hpp"

#include <string>

#include "xscale/error.hpp"

namespace xscale {

double luma(double r, double g, double b) noexcept {
  return (16.0 + 65.481 * r + 128.553 * g + 24.966 * b) / 255.0;
}

Image rgb_to_y(const Image& img) {
  if (img.channels() != 3) {
    throw Error(ErrorKind::kChannelMismatch,
                "rgb_to_y needs 3 channels, got " +
                    std::to_string(img.channels()));
  }
  Image y(img.width(), img.height(), 1);
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      y.at(r, c, 0) = luma(img.at(r, c, 0), img.at(r, c, 1), img.at(r, c, 2));
    }
  }
  y.clamp();
  return y;
}

}  // namespace xscale
