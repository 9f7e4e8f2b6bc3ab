#include "xscale/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xscale/error.hpp"

namespace xscale {

namespace {

void check_shape(int width, int height, int channels) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorKind::kInvalidDimension,
                "image dimensions must be positive, got " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
  if (channels != 1 && channels != 3) {
    throw Error(ErrorKind::kChannelMismatch,
                "images have 1 or 3 channels, got " + std::to_string(channels));
  }
}

}  // namespace

Image::Image(int width, int height, int channels, double fill)
    : width_(width), height_(height), channels_(channels) {
  check_shape(width, height, channels);
  data_.assign(static_cast<std::size_t>(width) * height * channels, fill);
}

Image::Image(int width, int height, int channels, std::vector<double> data)
    : width_(width), height_(height), channels_(channels),
      data_(std::move(data)) {
  check_shape(width, height, channels);
  if (data_.size() != static_cast<std::size_t>(width) * height * channels) {
    throw Error(ErrorKind::kInvalidDimension,
                "sample count does not match " + std::to_string(width) + "x" +
                    std::to_string(height) + "x" + std::to_string(channels));
  }
}

void Image::clamp() {
  for (double& v : data_) {
    v = std::isfinite(v) ? std::clamp(v, 0.0, 1.0) : 0.0;
  }
}

int resolve_index(int i, int n, BoundaryPolicy policy) {
  if (i >= 0 && i < n) return i;
  if (policy == BoundaryPolicy::kClampToEdge || n == 1) {
    return std::clamp(i, 0, n - 1);
  }
  const int period = 2 * (n - 1);
  int m = i % period;
  if (m < 0) m += period;
  return m < n ? m : period - m;
}

}  // namespace xscale
